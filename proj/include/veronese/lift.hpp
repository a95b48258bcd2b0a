#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "veronese/poisson.hpp"

namespace veronese {

enum class ContextKind { Polynomial, Poisson };

/// Generating set of the degree-d Veronese subalgebra.
///
/// Polynomial context: all monomials of total degree d in x_1..x_n
/// (count C(n+d-1, d)). Poisson context: monomials in the basis elements
/// whose weighted degree is a positive multiple of d, up to the table
/// bound, keeping only indecomposables (no proper sub-product with
/// d-divisible weighted degree). Order is deterministic: weighted degree
/// ascending, then graded-lex descending.
class VeroneseGeneratorSet {
public:
    static std::shared_ptr<const VeroneseGeneratorSet> polynomial(int n, int d);
    /// `generator_bound` caps the generators' weighted degree; by default it
    /// equals the table bound. A smaller cap leaves room in the table for
    /// brackets of derivations that raise degree.
    static std::shared_ptr<const VeroneseGeneratorSet> poisson(std::shared_ptr<const LyndonBasis> table, int d,
                                                               int generator_bound = -1);

    ContextKind kind() const { return kind_; }
    int d() const { return d_; }
    /// Weighted-degree cap of the generators (d in the polynomial context).
    int bound() const { return bound_; }
    const std::shared_ptr<const LyndonBasis>& table() const { return table_; }
    int n() const { return table_->n(); }

    int size() const { return static_cast<int>(gens_.size()); }
    const std::vector<Monomial>& generators() const { return gens_; }
    const Monomial& generator(int i) const { return gens_.at(i); }
    PoissonElement generator_element(int i) const;
    int index_of(const Monomial& m) const;  // -1 when absent
    std::string generator_text(int i) const;

    /// One quadratic relation Y_a Y_b = Y_c Y_e between generator pairs
    /// with equal monomial products.
    struct Relation {
        int a, b, c, e;
    };
    /// All pairwise relations, grouped against the first pair found for
    /// each product. Built once on demand; thread-safe.
    const std::vector<Relation>& relations() const;

private:
    VeroneseGeneratorSet() = default;

    ContextKind kind_ = ContextKind::Polynomial;
    int d_ = 0;
    int bound_ = 0;
    std::shared_ptr<const LyndonBasis> table_;
    std::vector<Monomial> gens_;
    std::map<Monomial, int, GrlexGreater> index_;
    mutable std::once_flag relations_once_;
    mutable std::vector<Relation> relations_;
};

/// A derivation of the Veronese subalgebra, given by generator images.
/// Images must lie in the subalgebra (weighted degree = 0 mod d).
struct VeroneseDerivation {
    std::shared_ptr<const VeroneseGeneratorSet> gens;
    std::vector<PoissonElement> images;
};

/// An algebra map of the Veronese subalgebra, given by generator images;
/// inverse images are required for the quotient-kernel check.
struct VeroneseAutomorphism {
    std::shared_ptr<const VeroneseGeneratorSet> gens;
    std::vector<PoissonElement> images;
    std::optional<std::vector<PoissonElement>> inverse_images;
};

VeroneseDerivation make_derivation(std::shared_ptr<const VeroneseGeneratorSet> gens,
                                   std::vector<PoissonElement> images);
VeroneseAutomorphism make_automorphism(std::shared_ptr<const VeroneseGeneratorSet> gens,
                                       std::vector<PoissonElement> images,
                                       std::optional<std::vector<PoissonElement>> inverse_images = std::nullopt);

/// A violated relation with both evaluated sides.
struct RelationViolation {
    VeroneseGeneratorSet::Relation relation;
    PoissonElement lhs;
    PoissonElement rhs;
    std::string describe(const VeroneseGeneratorSet& gens) const;
};

/// Additive compatibility D(Ya)Yb + Ya D(Yb) = D(Yc)Ye + Yc D(Ye) on every
/// relation; nullopt means consistent.
std::optional<RelationViolation> check_relations(const VeroneseDerivation& der);
/// Multiplicative compatibility a(Ya)a(Yb) = a(Yc)a(Ye) on every relation.
std::optional<RelationViolation> check_relations(const VeroneseAutomorphism& aut);

enum class Obstruction {
    NotDivisible,
    UnitNotConstant,
    NoRationalDthRoot,
    RelationInconsistent,
    NotInjectiveOnGenerators,
};

std::string to_string(Obstruction o);

/// Result of a lifting attempt: either the graded map on the ambient
/// variables or a structured obstruction with witness data.
struct LiftOutcome {
    bool lifted = false;

    // lifted
    AmbientMap map;
    Rational normalization = 1;  // the d-th root extracted for f_1 (automorphisms)
    /// Ambient variables the truncated generator set could not reach.
    std::vector<int> out_of_scope;

    // obstructed
    std::optional<Obstruction> reason;
    std::string witness;
    std::vector<std::pair<std::string, std::string>> witness_data;
};

/// Extends a Veronese derivation to a d-graded derivation of the ambient
/// algebra, or reports the obstruction. The image of each variable e_j is
/// recovered from S(e_j) = D(e_j^d) / (d e_j^{d-1}); when e_j^d leaves the
/// generator bound, the companion identity
/// S(e_j) = (D(x^k e_j) - k x^{k-1} S(x) e_j) / x^k with k = -deg e_j mod d
/// is used instead. A successful lift is verified: images stay in their
/// degree class, the lift reproduces every generator image, and in the
/// Poisson context the bracket-derivation law holds on in-bound basis pairs.
/// Callers must run check_relations first.
LiftOutcome lift_derivation(const VeroneseDerivation& der);

/// Lifts a Veronese automorphism to a d-graded endomorphism (n >= 2 only;
/// one variable throws OneVariableContext). Follows the constructive
/// extraction: reduce a(x2/x1) to f2/f1, divide a(x1^d) by f1^d to a
/// constant unit v, extract a rational d-th root mu of v, rescale, then
/// recover every remaining image from the reduced fraction of
/// a(e_i x1^k)/a(x1^{deg e_i + k}) against f1. Obstructions: NotDivisible,
/// UnitNotConstant, NoRationalDthRoot; verification failures surface as
/// RelationInconsistent. For even d the sign is fixed by making f_1's
/// leading coefficient positive.
LiftOutcome lift_automorphism(const VeroneseAutomorphism& aut);

/// Composes with the scalar automorphism x_i -> -x_i (d even only):
/// every image of a degree-s variable is scaled by (-1)^s. Used to exhibit
/// the lambda = -1 coset of the lift.
AmbientMap flip_sign_normalization(const AmbientMap& map);

/// Locally-nilpotent check by iterating the lifted derivation on every
/// covered variable. A repeated nonzero iterate proves the orbit never
/// vanishes (NotNilpotent); exhausting the cap is a non-verdict.
struct LndReport {
    enum class Verdict { LocallyNilpotent, NotNilpotent, CapExceeded };
    Verdict verdict = Verdict::CapExceeded;
    int cap = 0;
    /// Iterations needed to reach zero, per covered variable; nullopt when
    /// the chain did not terminate within the cap.
    std::vector<std::optional<int>> indices;
    std::string witness;
};

std::string to_string(LndReport::Verdict v);

LndReport check_locally_nilpotent(const AmbientMap& map, int cap);

/// Lifts the map and its inverse, composes them, and checks the composite
/// is the scalar automorphism e_i -> lambda^{deg e_i} e_i with lambda^d = 1.
/// Returns lambda. Throws if either side fails to lift (the obstruction is
/// in the returned outcome of a direct lift call) or if the composite is
/// not scalar, which would indicate a lifting bug.
Rational verify_quotient_kernel(const VeroneseAutomorphism& aut);
Rational verify_quotient_kernel(const LiftOutcome& forward, const LiftOutcome& backward, int d);

/// Evaluates a d-graded ambient derivation on every generator. The map
/// must cover all variables and satisfy S(e_i) in the degree class of
/// deg e_i mod d; the result passes check_relations by construction.
VeroneseDerivation restrict_derivation(std::shared_ptr<const VeroneseGeneratorSet> gens, const AmbientMap& map);

/// Same for an automorphism, by multiplicativity.
VeroneseAutomorphism restrict_automorphism(std::shared_ptr<const VeroneseGeneratorSet> gens, const AmbientMap& map,
                                           const std::optional<AmbientMap>& inverse = std::nullopt);

}  // namespace veronese
