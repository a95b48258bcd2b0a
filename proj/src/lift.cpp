#include "veronese/lift.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

std::string var_name(const LyndonBasis& table, int var) { return table.name(var); }

/// All monomials over the table variables with the exact weighted degree.
void enumerate_weighted(const LyndonBasis& table, int var, int remaining, std::vector<Monomial::Entry>& acc,
                        std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(Monomial::from_entries(acc));
        return;
    }
    if (var >= table.size()) return;
    const int w = table.element(var).degree;
    if (w > remaining) {
        // Degrees are non-decreasing with the index, so no later variable fits.
        return;
    }
    const int max_exp = remaining / w;
    for (int e = max_exp; e >= 1; --e) {
        acc.emplace_back(var, e);
        enumerate_weighted(table, var + 1, remaining - e * w, acc, out);
        acc.pop_back();
    }
    enumerate_weighted(table, var + 1, remaining, acc, out);
}

std::vector<Monomial> monomials_of_weighted_degree(const LyndonBasis& table, int degree) {
    std::vector<Monomial> out;
    std::vector<Monomial::Entry> acc;
    enumerate_weighted(table, 0, degree, acc, out);
    return out;
}

/// No proper nonempty sub-multiset of the factors has d-divisible degree.
bool is_indecomposable(const Monomial& m, const LyndonBasis& table, int d) {
    std::vector<int> degrees;
    for (const auto& [var, exp] : m.entries())
        for (int i = 0; i < exp; ++i) degrees.push_back(table.element(var).degree % d);
    const int total = static_cast<int>(degrees.size());
    if (total <= 1) return true;
    // reachable[count][residue]
    std::vector<std::vector<char>> reach(total + 1, std::vector<char>(d, 0));
    reach[0][0] = 1;
    for (int w : degrees) {
        for (int c = total - 1; c >= 0; --c)
            for (int r = 0; r < d; ++r)
                if (reach[c][r]) reach[c + 1][(r + w) % d] = 1;
    }
    for (int c = 1; c < total; ++c)
        if (reach[c][0]) return false;
    return true;
}

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

}  // namespace

std::shared_ptr<const VeroneseGeneratorSet> VeroneseGeneratorSet::polynomial(int n, int d) {
    if (n < 1) throw InvalidInput("need at least one variable");
    if (d < 2) throw InvalidInput("Veronese degree must be at least 2");
    auto set = std::shared_ptr<VeroneseGeneratorSet>(new VeroneseGeneratorSet());
    set->kind_ = ContextKind::Polynomial;
    set->d_ = d;
    set->bound_ = d;
    set->table_ = LyndonBasis::make(n, 1);
    set->gens_ = monomials_of_weighted_degree(*set->table_, d);
    std::sort(set->gens_.begin(), set->gens_.end(), GrlexDescending{});
    for (int i = 0; i < static_cast<int>(set->gens_.size()); ++i) set->index_.emplace(set->gens_[i], i);
    return set;
}

std::shared_ptr<const VeroneseGeneratorSet> VeroneseGeneratorSet::poisson(std::shared_ptr<const LyndonBasis> table,
                                                                          int d, int generator_bound) {
    if (d < 2) throw InvalidInput("Veronese degree must be at least 2");
    if (!table) throw InvalidInput("missing basis table");
    if (generator_bound < 0) generator_bound = table->max_degree();
    if (generator_bound > table->max_degree())
        throw InvalidInput("generator bound exceeds the basis table bound");
    if (generator_bound < d) throw InvalidInput("generator bound is smaller than the Veronese degree");
    auto set = std::shared_ptr<VeroneseGeneratorSet>(new VeroneseGeneratorSet());
    set->kind_ = ContextKind::Poisson;
    set->d_ = d;
    set->bound_ = generator_bound;
    set->table_ = std::move(table);
    for (int w = d; w <= set->bound_; w += d) {
        auto level = monomials_of_weighted_degree(*set->table_, w);
        std::sort(level.begin(), level.end(), GrlexDescending{});
        for (auto& m : level)
            if (is_indecomposable(m, *set->table_, d)) set->gens_.push_back(std::move(m));
    }
    for (int i = 0; i < static_cast<int>(set->gens_.size()); ++i) set->index_.emplace(set->gens_[i], i);
    return set;
}

PoissonElement VeroneseGeneratorSet::generator_element(int i) const {
    return PoissonElement::term(table_, gens_.at(i), 1);
}

int VeroneseGeneratorSet::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

std::string VeroneseGeneratorSet::generator_text(int i) const { return to_string(generator_element(i)); }

const std::vector<VeroneseGeneratorSet::Relation>& VeroneseGeneratorSet::relations() const {
    std::call_once(relations_once_, [this] {
        std::map<Monomial, std::pair<int, int>, GrlexGreater> first_pair;
        for (int a = 0; a < size(); ++a) {
            for (int b = a; b < size(); ++b) {
                const Monomial product = gens_[a].times(gens_[b]);
                auto [it, inserted] = first_pair.emplace(product, std::make_pair(a, b));
                if (!inserted) relations_.push_back(Relation{a, b, it->second.first, it->second.second});
            }
        }
    });
    return relations_;
}

VeroneseDerivation make_derivation(std::shared_ptr<const VeroneseGeneratorSet> gens,
                                   std::vector<PoissonElement> images) {
    if (static_cast<int>(images.size()) != gens->size())
        throw InvalidInput("expected one image per generator");
    for (int i = 0; i < gens->size(); ++i) {
        if (!images[i].table()->same_table(*gens->table()))
            throw ArityMismatch("image built over a different basis table");
        if (!images[i].is_d_homogeneous(gens->d(), 0))
            throw InvalidInput("image of " + gens->generator_text(i) + " is not inside the Veronese subalgebra");
    }
    return VeroneseDerivation{std::move(gens), std::move(images)};
}

VeroneseAutomorphism make_automorphism(std::shared_ptr<const VeroneseGeneratorSet> gens,
                                       std::vector<PoissonElement> images,
                                       std::optional<std::vector<PoissonElement>> inverse_images) {
    if (static_cast<int>(images.size()) != gens->size())
        throw InvalidInput("expected one image per generator");
    auto validate = [&](const std::vector<PoissonElement>& imgs) {
        for (int i = 0; i < gens->size(); ++i) {
            if (!imgs[i].table()->same_table(*gens->table()))
                throw ArityMismatch("image built over a different basis table");
            if (!imgs[i].is_d_homogeneous(gens->d(), 0))
                throw InvalidInput("image of " + gens->generator_text(i) +
                                   " is not inside the Veronese subalgebra");
        }
    };
    validate(images);
    if (inverse_images) {
        if (static_cast<int>(inverse_images->size()) != gens->size())
            throw InvalidInput("expected one inverse image per generator");
        validate(*inverse_images);
    }
    return VeroneseAutomorphism{std::move(gens), std::move(images), std::move(inverse_images)};
}

std::string RelationViolation::describe(const VeroneseGeneratorSet& gens) const {
    return gens.generator_text(relation.a) + " * " + gens.generator_text(relation.b) + " = " +
           gens.generator_text(relation.c) + " * " + gens.generator_text(relation.e) +
           " maps inconsistently: " + to_string(lhs) + " != " + to_string(rhs);
}

std::optional<RelationViolation> check_relations(const VeroneseDerivation& der) {
    const auto& gens = *der.gens;
    for (const auto& rel : gens.relations()) {
        const PoissonElement lhs =
            der.images[rel.a] * gens.generator_element(rel.b) + gens.generator_element(rel.a) * der.images[rel.b];
        const PoissonElement rhs =
            der.images[rel.c] * gens.generator_element(rel.e) + gens.generator_element(rel.c) * der.images[rel.e];
        if (!(lhs == rhs)) return RelationViolation{rel, lhs, rhs};
    }
    return std::nullopt;
}

std::optional<RelationViolation> check_relations(const VeroneseAutomorphism& aut) {
    const auto& gens = *aut.gens;
    auto check = [&](const std::vector<PoissonElement>& images) -> std::optional<RelationViolation> {
        for (const auto& rel : gens.relations()) {
            const PoissonElement lhs = images[rel.a] * images[rel.b];
            const PoissonElement rhs = images[rel.c] * images[rel.e];
            if (!(lhs == rhs)) return RelationViolation{rel, lhs, rhs};
        }
        return std::nullopt;
    };
    if (auto bad = check(aut.images)) return bad;
    if (aut.inverse_images)
        if (auto bad = check(*aut.inverse_images)) return bad;
    return std::nullopt;
}

std::string to_string(Obstruction o) {
    switch (o) {
        case Obstruction::NotDivisible: return "not_divisible";
        case Obstruction::UnitNotConstant: return "unit_not_constant";
        case Obstruction::NoRationalDthRoot: return "no_rational_dth_root";
        case Obstruction::RelationInconsistent: return "relation_inconsistent";
        case Obstruction::NotInjectiveOnGenerators: return "not_injective_on_generators";
    }
    return "unknown";
}

namespace {

LiftOutcome obstructed(Obstruction reason, std::string witness,
                       std::vector<std::pair<std::string, std::string>> data = {}) {
    LiftOutcome out;
    out.lifted = false;
    out.reason = reason;
    out.witness = std::move(witness);
    out.witness_data = std::move(data);
    return out;
}

/// Shared post-lift verification: images stay in their degree class, the
/// lift reproduces every generator image, and for Poisson contexts the
/// bracket law holds on in-bound basis pairs.
std::optional<LiftOutcome> verify_lift(const VeroneseGeneratorSet& gens, const AmbientMap& map,
                                       const std::vector<PoissonElement>& generator_images, bool derivation) {
    const auto& table = *gens.table();
    const int d = gens.d();
    for (std::size_t k = 0; k < map.scope.size(); ++k) {
        const int var = map.scope[k];
        const int residue = table.element(var).degree % d;
        if (!map.images[k].is_d_homogeneous(d, residue))
            return obstructed(Obstruction::RelationInconsistent,
                              "image of " + var_name(table, var) + " is not concentrated in degree class " +
                                  std::to_string(residue) + " mod " + std::to_string(d),
                              {{var_name(table, var), to_string(map.images[k])}});
    }
    for (int i = 0; i < gens.size(); ++i) {
        const PoissonElement y = gens.generator_element(i);
        if (!map.covers_support(y)) continue;
        const PoissonElement through =
            derivation ? apply_derivation(map, y) : apply_morphism(map, y);
        if (!(through == generator_images[i]))
            return obstructed(Obstruction::RelationInconsistent,
                              "lift does not reproduce the image of " + gens.generator_text(i),
                              {{"generator", gens.generator_text(i)},
                               {"expected", to_string(generator_images[i])},
                               {"lifted", to_string(through)}});
    }
    if (gens.kind() == ContextKind::Poisson) {
        for (std::size_t a = 0; a < map.scope.size(); ++a) {
            for (std::size_t b = a + 1; b < map.scope.size(); ++b) {
                const int i = map.scope[a];
                const int j = map.scope[b];
                if (table.element(i).degree + table.element(j).degree > table.max_degree()) continue;
                try {
                    const PoissonElement eij = PoissonElement::from_lie(gens.table(), table.bracket(i, j));
                    if (!map.covers_support(eij)) continue;  // beyond the lift scope
                    const PoissonElement ei = PoissonElement::variable(gens.table(), i);
                    const PoissonElement ej = PoissonElement::variable(gens.table(), j);
                    PoissonElement lhs, rhs;
                    if (derivation) {
                        lhs = apply_derivation(map, eij);
                        rhs = poisson_bracket(map.images[a], ej) + poisson_bracket(ei, map.images[b]);
                    } else {
                        lhs = apply_morphism(map, eij);
                        rhs = poisson_bracket(map.images[a], map.images[b]);
                    }
                    if (!(lhs == rhs))
                        return obstructed(Obstruction::RelationInconsistent,
                                          std::string("bracket law fails on {") + var_name(table, i) + ", " +
                                              var_name(table, j) + "}",
                                          {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
                } catch (const DegreeOverflow&) {
                    // Verification is scoped to the table bound.
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

LiftOutcome lift_derivation(const VeroneseDerivation& der) {
    const auto& gens = *der.gens;
    const auto table = gens.table();
    const int d = gens.d();

    std::vector<int> scope;
    std::vector<PoissonElement> images;
    std::vector<int> out_of_scope;
    for (int var = 0; var < table->size(); ++var) {
        const int s = table->element(var).degree;
        const PoissonElement e = PoissonElement::variable(table, var);
        if (s % d == 0) {
            // e_var already lies in the subalgebra and is a generator.
            const int gi = gens.index_of(Monomial::variable(var));
            if (gi < 0) {
                out_of_scope.push_back(var);
                continue;
            }
            scope.push_back(var);
            images.push_back(der.images[gi]);
            continue;
        }
        const int m = d / std::gcd(s, d);
        const int power_gen = gens.index_of(Monomial::variable(var, m));
        if (power_gen >= 0) {
            // S(e) = D(e^d) / (d e^{d-1}) with e^d a power of the generator e^m.
            const int t = d / m;
            const PoissonElement g = gens.generator_element(power_gen);
            const PoissonElement dividend = Rational(t) * pow(g, t - 1) * der.images[power_gen];
            const PoissonElement divisor = Rational(d) * pow(e, d - 1);
            Division div = divide_exact(dividend, divisor);
            if (!div.exact)
                return obstructed(Obstruction::NotDivisible,
                                  "D(" + var_name(*table, var) + "^" + std::to_string(d) +
                                      ") is not divisible by " + to_string(divisor),
                                  {{"dividend", to_string(dividend)},
                                   {"divisor", to_string(divisor)},
                                   {"remainder", to_string(PoissonElement(table, div.remainder))}});
            scope.push_back(var);
            images.emplace_back(table, std::move(div.quotient));
            continue;
        }
        // Companion route: with k = -s mod d, x1^k e is a generator and
        // D(x1^k e) = k x1^{k-1} S(x1) e + x1^k S(e).
        const int k = (d - s % d) % d;
        const int companion = 0;  // x1; distinct from e since deg e >= 2 here
        const int comp_gen = gens.index_of(Monomial::variable(companion, k).times(Monomial::variable(var)));
        if (comp_gen < 0 || scope.empty() || scope.front() != companion) {
            out_of_scope.push_back(var);
            continue;
        }
        const PoissonElement x = PoissonElement::variable(table, companion);
        const PoissonElement sx = images.front();
        const PoissonElement dividend = der.images[comp_gen] - Rational(k) * pow(x, k - 1) * sx * e;
        const PoissonElement divisor = pow(x, k);
        Division div = divide_exact(dividend, divisor);
        if (!div.exact)
            return obstructed(Obstruction::NotDivisible,
                              "D(" + gens.generator_text(comp_gen) + ") does not determine S(" +
                                  var_name(*table, var) + ") inside the algebra",
                              {{"dividend", to_string(dividend)},
                               {"divisor", to_string(divisor)},
                               {"remainder", to_string(PoissonElement(table, div.remainder))}});
        scope.push_back(var);
        images.emplace_back(table, std::move(div.quotient));
    }

    AmbientMap map;
    map.table = table;
    map.scope = std::move(scope);
    map.images = std::move(images);
    if (auto bad = verify_lift(gens, map, der.images, /*derivation=*/true)) return *bad;

    LiftOutcome out;
    out.lifted = true;
    out.map = std::move(map);
    out.normalization = 1;
    out.out_of_scope = std::move(out_of_scope);
    return out;
}

LiftOutcome lift_automorphism(const VeroneseAutomorphism& aut) {
    const auto& gens = *aut.gens;
    const auto table = gens.table();
    const int d = gens.d();
    if (table->n() < 2)
        throw OneVariableContext(
            "automorphism lifting needs at least two variables: over K[x] the Veronese subalgebra is K[x^d], "
            "whose automorphism x^d -> x^d + 1 is induced by no automorphism of K[x]");

    for (int i = 0; i < gens.size(); ++i)
        if (aut.images[i].is_zero())
            return obstructed(Obstruction::NotInjectiveOnGenerators,
                              "generator " + gens.generator_text(i) + " is mapped to zero",
                              {{"generator", gens.generator_text(i)}});

    // Seed: reduce a(x2/x1) = a(x2 x1^{d-1}) / a(x1^d) to lowest terms f2/f1.
    const int g_x1d = gens.index_of(Monomial::variable(0, d));
    const int g_x2x1 = gens.index_of(Monomial::variable(0, d - 1).times(Monomial::variable(1)));
    assert(g_x1d >= 0 && g_x2x1 >= 0);
    const PoissonElement& b = aut.images[g_x1d];  // a(x1^d)
    const PoissonFraction seed(aut.images[g_x2x1], b);
    const PoissonElement f1_reduced = seed.den();

    // Unit extraction: a(x1^d) = v f1^d with v a constant d-th power.
    Division vdiv = divide_exact(b, pow(f1_reduced, d));
    if (!vdiv.exact)
        return obstructed(Obstruction::NotDivisible,
                          "a(x1^" + std::to_string(d) + ") is not divisible by the d-th power of the reduced "
                          "denominator of a(x2/x1)",
                          {{"dividend", to_string(b)}, {"divisor", to_string(pow(f1_reduced, d))}});
    const PoissonElement v(table, std::move(vdiv.quotient));
    if (!v.is_constant())
        return obstructed(Obstruction::UnitNotConstant,
                          "the unit a(x1^" + std::to_string(d) + ") / f1^" + std::to_string(d) +
                              " is not a constant",
                          {{"unit", to_string(v)}});
    const Rational unit = v.constant_value();
    const auto mu = rational_dth_root(unit, d);
    if (!mu)
        return obstructed(Obstruction::NoRationalDthRoot,
                          "the unit " + to_string(unit) + " has no rational " + std::to_string(d) + "-th root",
                          {{"unit", to_string(unit)}});
    // f1 = mu * (monic f1); for even d, mu > 0 fixes the sign convention.
    const PoissonElement f1 = *mu * f1_reduced;

    std::vector<int> scope{0};
    std::vector<PoissonElement> images{f1};
    std::vector<int> out_of_scope;
    for (int var = 1; var < table->size(); ++var) {
        const int s = table->element(var).degree;
        const int k = (d - s % d) % d;
        const Monomial numerator_mono = Monomial::variable(0, k).times(Monomial::variable(var));
        const int num_gen = gens.index_of(numerator_mono);
        if (num_gen < 0) {
            out_of_scope.push_back(var);
            continue;
        }
        const int p = (s + k) / d;
        // a(e x1^k) / a(x1^{s+k}) reduced; the denominator must be f1^s up
        // to the constant resolved by u below.
        const PoissonFraction fr(aut.images[num_gen], pow(b, p));
        Division udiv = divide_exact(pow(f1, s), fr.den());
        if (!udiv.exact)
            return obstructed(Obstruction::NotDivisible,
                              "reduced denominator of a(" + var_name(*table, var) + "/x1^" + std::to_string(s) +
                                  ") does not divide f1^" + std::to_string(s),
                              {{"denominator", to_string(fr.den())}, {"f1", to_string(f1)}});
        const PoissonElement u(table, std::move(udiv.quotient));
        if (!u.is_constant())
            return obstructed(Obstruction::UnitNotConstant,
                              "f1^" + std::to_string(s) + " and the reduced denominator of a(" +
                                  var_name(*table, var) + "/x1^" + std::to_string(s) +
                                  ") differ by a non-constant factor",
                              {{"factor", to_string(u)}});
        scope.push_back(var);
        images.push_back(fr.num() * u.constant_value());
    }

    AmbientMap map;
    map.table = table;
    map.scope = std::move(scope);
    map.images = std::move(images);
    if (auto bad = verify_lift(gens, map, aut.images, /*derivation=*/false)) return *bad;

    LiftOutcome out;
    out.lifted = true;
    out.map = std::move(map);
    out.normalization = *mu;
    out.out_of_scope = std::move(out_of_scope);
    return out;
}

AmbientMap flip_sign_normalization(const AmbientMap& map) {
    AmbientMap out = map;
    for (std::size_t k = 0; k < out.scope.size(); ++k) {
        if (map.table->element(out.scope[k]).degree % 2 != 0) out.images[k] *= Rational(-1);
    }
    return out;
}

std::string to_string(LndReport::Verdict v) {
    switch (v) {
        case LndReport::Verdict::LocallyNilpotent: return "locally_nilpotent";
        case LndReport::Verdict::NotNilpotent: return "not_nilpotent";
        case LndReport::Verdict::CapExceeded: return "cap_exceeded";
    }
    return "unknown";
}

LndReport check_locally_nilpotent(const AmbientMap& map, int cap) {
    if (cap < 1) throw InvalidInput("iteration cap must be positive");
    LndReport report;
    report.cap = cap;
    report.indices.assign(map.scope.size(), std::nullopt);
    bool all_zero = true;
    for (std::size_t k = 0; k < map.scope.size(); ++k) {
        PoissonElement current = PoissonElement::variable(map.table, map.scope[k]);
        std::vector<PoissonElement> seen;
        bool resolved = false;
        for (int step = 1; step <= cap; ++step) {
            if (!map.covers_support(current)) break;  // cannot iterate further
            seen.push_back(current);
            current = apply_derivation(map, current);
            if (current.is_zero()) {
                report.indices[k] = step;
                resolved = true;
                break;
            }
            for (std::size_t prev = 0; prev < seen.size(); ++prev) {
                if (seen[prev] == current) {
                    // The orbit cycles through nonzero values, so no power
                    // of the derivation kills this variable.
                    report.verdict = LndReport::Verdict::NotNilpotent;
                    report.witness = "iterates of " + map.table->name(map.scope[k]) +
                                     " repeat without vanishing: S^" + std::to_string(prev) + " = S^" +
                                     std::to_string(seen.size()) + " = " + to_string(current);
                    return report;
                }
            }
        }
        if (!resolved) all_zero = false;
    }
    report.verdict = all_zero ? LndReport::Verdict::LocallyNilpotent : LndReport::Verdict::CapExceeded;
    if (!all_zero) report.witness = "some variable did not vanish within " + std::to_string(cap) + " iterations";
    return report;
}

Rational verify_quotient_kernel(const LiftOutcome& forward, const LiftOutcome& backward, int d) {
    if (!forward.lifted || !backward.lifted) throw InvalidInput("both lifts must succeed before composing");
    const auto& table = *forward.map.table;
    std::optional<Rational> lambda;
    bool checked_any = false;
    for (std::size_t k = 0; k < backward.map.scope.size(); ++k) {
        const int var = backward.map.scope[k];
        if (!forward.map.covers_support(backward.map.images[k])) continue;
        const PoissonElement composite = apply_morphism(forward.map, backward.map.images[k]);
        if (composite.is_zero() || composite.poly().term_count() != 1)
            throw KernelError("composite of the two lifts is not scalar on " + table.name(var) +
                              ": " + to_string(composite));
        const auto& [mono, coeff] = composite.poly().leading_term();
        if (!(mono == Monomial::variable(var)))
            throw KernelError("composite of the two lifts moves " + table.name(var) + " to " +
                              to_string(composite));
        const int s = table.element(var).degree;
        if (!lambda && s == 1) lambda = coeff;
        checked_any = true;
        if (lambda) {
            Rational expected = 1;
            for (int i = 0; i < s; ++i) expected *= *lambda;
            if (coeff != expected)
                throw KernelError("composite is not a single scalar automorphism: " + table.name(var) +
                                  " scales by " + to_string(coeff));
        }
    }
    if (!checked_any || !lambda) throw KernelError("composite could not be evaluated on any variable");
    Rational power = 1;
    for (int i = 0; i < d; ++i) power *= *lambda;
    if (power != 1)
        throw KernelError("composite scalar " + to_string(*lambda) + " is not a " + std::to_string(d) +
                          "-th root of unity");
    return *lambda;
}

Rational verify_quotient_kernel(const VeroneseAutomorphism& aut) {
    if (!aut.inverse_images) throw InvalidInput("quotient-kernel check needs inverse images");
    LiftOutcome forward = lift_automorphism(aut);
    if (!forward.lifted)
        throw InvalidInput("forward map is obstructed: " + forward.witness);
    VeroneseAutomorphism inverse{aut.gens, *aut.inverse_images, std::nullopt};
    LiftOutcome backward = lift_automorphism(inverse);
    if (!backward.lifted)
        throw InvalidInput("inverse map is obstructed: " + backward.witness);
    return verify_quotient_kernel(forward, backward, aut.gens->d());
}

namespace {

void require_graded_map(const VeroneseGeneratorSet& gens, const AmbientMap& map) {
    if (!map.table->same_table(*gens.table())) throw ArityMismatch("map built over a different basis table");
    for (int i = 0; i < gens.size(); ++i)
        if (!map.covers_support(gens.generator_element(i)))
            throw InvalidInput("map does not cover the support of generator " + gens.generator_text(i));
    const int d = gens.d();
    for (std::size_t k = 0; k < map.scope.size(); ++k) {
        const int residue = map.table->element(map.scope[k]).degree % d;
        if (!map.images[k].is_d_homogeneous(d, residue))
            throw NotDGraded("image of " + map.table->name(map.scope[k]) +
                             " is not concentrated in degree class " + std::to_string(residue) + " mod " +
                             std::to_string(d));
    }
}

}  // namespace

VeroneseDerivation restrict_derivation(std::shared_ptr<const VeroneseGeneratorSet> gens, const AmbientMap& map) {
    require_graded_map(*gens, map);
    std::vector<PoissonElement> images;
    images.reserve(gens->size());
    for (int i = 0; i < gens->size(); ++i) images.push_back(apply_derivation(map, gens->generator_element(i)));
    return VeroneseDerivation{std::move(gens), std::move(images)};
}

VeroneseAutomorphism restrict_automorphism(std::shared_ptr<const VeroneseGeneratorSet> gens, const AmbientMap& map,
                                           const std::optional<AmbientMap>& inverse) {
    require_graded_map(*gens, map);
    std::vector<PoissonElement> images;
    images.reserve(gens->size());
    for (int i = 0; i < gens->size(); ++i) images.push_back(apply_morphism(map, gens->generator_element(i)));
    std::optional<std::vector<PoissonElement>> inverse_images;
    if (inverse) {
        require_graded_map(*gens, *inverse);
        inverse_images.emplace();
        inverse_images->reserve(gens->size());
        for (int i = 0; i < gens->size(); ++i)
            inverse_images->push_back(apply_morphism(*inverse, gens->generator_element(i)));
    }
    return VeroneseAutomorphism{std::move(gens), std::move(images), std::move(inverse_images)};
}

}  // namespace veronese
