#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "veronese/lift.hpp"
#include "veronese/poisson.hpp"

namespace veronese {

/// Deterministic random generators for the selftest harness and the
/// property suites. Every consumer seeds explicitly, so runs reproduce.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }
    int uniform(int lo, int hi);  // inclusive
    bool chance(double p);

    Rational rational(int max_abs_num = 9, int max_den = 4);
    Rational nonzero_rational(int max_abs_num = 9, int max_den = 4);

    Monomial monomial(int arity, int max_degree);
    Polynomial polynomial(int arity, int max_degree, int max_terms);
    Polynomial nonzero_polynomial(int arity, int max_degree, int max_terms);

    PoissonElement poisson(const std::shared_ptr<const LyndonBasis>& table, int max_wdeg, int max_terms);
    PoissonElement nonzero_poisson(const std::shared_ptr<const LyndonBasis>& table, int max_wdeg, int max_terms);
    /// All monomials carry the exact weighted degree.
    PoissonElement homogeneous_poisson(const std::shared_ptr<const LyndonBasis>& table, int wdeg, int max_terms);
    /// All monomials fall in one degree class mod d.
    PoissonElement residue_poisson(const std::shared_ptr<const LyndonBasis>& table, int d, int residue,
                                   int max_wdeg, int max_terms);

    /// d-graded derivation images: S(e_i) lies in the class of deg e_i mod d.
    /// When `homogeneous` is set every image is honestly homogeneous of
    /// degree deg e_i, which keeps bracket checks inside the table bound.
    AmbientMap graded_derivation(const std::shared_ptr<const LyndonBasis>& table, int d, int max_wdeg,
                                 int max_terms, bool homogeneous = false);

    /// Triangular d-graded derivation of the polynomial context:
    /// S(x_i) uses only variables with larger index, so it is locally
    /// nilpotent by construction.
    AmbientMap triangular_derivation(const std::shared_ptr<const LyndonBasis>& table, int d);

private:
    std::mt19937_64 gen_;
};

/// A d-graded automorphism of the polynomial context with its exact inverse.
struct InvertiblePair {
    AmbientMap forward;
    AmbientMap inverse;
};

/// A single elementary d-graded automorphism: a nonzero scaling of one
/// variable, or a shear x_t -> x_t + c * m with m a monomial in the other
/// variables of degree 1 mod d.
InvertiblePair random_elementary_automorphism(SeededRng& rng, const std::shared_ptr<const LyndonBasis>& table,
                                              int d, int max_shear_degree);

/// Composition outer . inner on ambient maps (morphisms).
AmbientMap compose_morphisms(const AmbientMap& outer, const AmbientMap& inner);

/// Composition of 1..max_factors elementary automorphisms whose images stay
/// within max_total_degree (resamples until the bound holds).
InvertiblePair random_graded_automorphism(SeededRng& rng, const std::shared_ptr<const LyndonBasis>& table, int d,
                                          int max_factors, int max_total_degree);

/// Extends images of x_1..x_n to every basis element of degree up to
/// `up_to_degree` (default: the full table) by bracketing along the
/// standard factorization: e = [l, r] maps to {image(l), image(r)}.
/// This is how a morphism determined on the free generators acts on the
/// whole basis. Throws DegreeOverflow when a needed bracket leaves the
/// table bound.
AmbientMap poisson_extension(const std::shared_ptr<const LyndonBasis>& table,
                             const std::vector<PoissonElement>& x_images, int up_to_degree = -1);

/// The unique Poisson-derivation extension of arbitrary images of the free
/// generators: e = [l, r] maps to {D(l), e_r} + {e_l, D(r)}. Covers basis
/// elements of degree up to `up_to_degree` (default: the full table).
AmbientMap poisson_derivation_extension(const std::shared_ptr<const LyndonBasis>& table,
                                        const std::vector<PoissonElement>& x_images, int up_to_degree = -1);

/// The inner derivation {g, .} on the covered prefix of the table.
AmbientMap inner_derivation(const std::shared_ptr<const LyndonBasis>& table, const PoissonElement& g,
                            int up_to_degree = -1);

}  // namespace veronese
