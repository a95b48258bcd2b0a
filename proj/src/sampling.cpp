#include "veronese/sampling.hpp"

#include <algorithm>

#include "veronese/errors.hpp"

namespace veronese {

int SeededRng::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(gen_);
}

bool SeededRng::chance(double p) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    return dist(gen_) < p;
}

Rational SeededRng::rational(int max_abs_num, int max_den) {
    const int num = uniform(-max_abs_num, max_abs_num);
    const int den = uniform(1, max_den);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational SeededRng::nonzero_rational(int max_abs_num, int max_den) {
    while (true) {
        Rational q = rational(max_abs_num, max_den);
        if (q != 0) return q;
    }
}

Monomial SeededRng::monomial(int arity, int max_degree) {
    std::vector<Monomial::Entry> entries;
    int budget = uniform(0, max_degree);
    while (budget > 0) {
        const int var = uniform(0, arity - 1);
        const int exp = uniform(1, budget);
        entries.emplace_back(var, exp);
        budget -= exp;
    }
    return Monomial::from_entries(std::move(entries));
}

Polynomial SeededRng::polynomial(int arity, int max_degree, int max_terms) {
    Polynomial p(arity);
    const int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) p += Polynomial::term(arity, monomial(arity, max_degree), rational());
    return p;
}

Polynomial SeededRng::nonzero_polynomial(int arity, int max_degree, int max_terms) {
    while (true) {
        Polynomial p = polynomial(arity, max_degree, max_terms);
        if (!p.is_zero()) return p;
    }
}

namespace {

Monomial weighted_monomial(SeededRng& rng, const LyndonBasis& table, int max_wdeg) {
    std::vector<Monomial::Entry> entries;
    int budget = rng.uniform(0, max_wdeg);
    int attempts = 0;
    while (budget > 0 && attempts < 64) {
        ++attempts;
        const int var = rng.uniform(0, table.size() - 1);
        const int w = table.element(var).degree;
        if (w > budget) continue;
        const int exp = rng.uniform(1, budget / w);
        entries.emplace_back(var, exp);
        budget -= exp * w;
    }
    return Monomial::from_entries(std::move(entries));
}

}  // namespace

PoissonElement SeededRng::poisson(const std::shared_ptr<const LyndonBasis>& table, int max_wdeg, int max_terms) {
    PoissonElement f = PoissonElement::zero(table);
    const int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i)
        f += PoissonElement::term(table, weighted_monomial(*this, *table, max_wdeg), rational());
    return f;
}

PoissonElement SeededRng::nonzero_poisson(const std::shared_ptr<const LyndonBasis>& table, int max_wdeg,
                                          int max_terms) {
    while (true) {
        PoissonElement f = poisson(table, max_wdeg, max_terms);
        if (!f.is_zero()) return f;
    }
}

PoissonElement SeededRng::homogeneous_poisson(const std::shared_ptr<const LyndonBasis>& table, int wdeg,
                                              int max_terms) {
    PoissonElement f = PoissonElement::zero(table);
    const int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
        // Rejection sample a monomial of the exact weighted degree.
        for (int attempt = 0; attempt < 256; ++attempt) {
            Monomial m = weighted_monomial(*this, *table, wdeg);
            if (weighted_degree(m, *table) == wdeg) {
                f += PoissonElement::term(table, m, rational());
                break;
            }
        }
    }
    return f;
}

PoissonElement SeededRng::residue_poisson(const std::shared_ptr<const LyndonBasis>& table, int d, int residue,
                                          int max_wdeg, int max_terms) {
    PoissonElement f = PoissonElement::zero(table);
    const int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) {
        for (int attempt = 0; attempt < 256; ++attempt) {
            Monomial m = weighted_monomial(*this, *table, max_wdeg);
            if (weighted_degree(m, *table) % d == residue) {
                f += PoissonElement::term(table, m, rational());
                break;
            }
        }
    }
    return f;
}

AmbientMap SeededRng::graded_derivation(const std::shared_ptr<const LyndonBasis>& table, int d, int max_wdeg,
                                        int max_terms, bool homogeneous) {
    std::vector<PoissonElement> images;
    images.reserve(table->size());
    for (int var = 0; var < table->size(); ++var) {
        const int s = table->element(var).degree;
        if (homogeneous) {
            images.push_back(chance(0.15) ? PoissonElement::zero(table)
                                          : homogeneous_poisson(table, s, max_terms));
        } else {
            images.push_back(residue_poisson(table, d, s % d, max_wdeg, max_terms));
        }
    }
    return AmbientMap::full(table, std::move(images));
}

AmbientMap SeededRng::triangular_derivation(const std::shared_ptr<const LyndonBasis>& table, int d) {
    const int n = table->size();
    std::vector<PoissonElement> images;
    images.reserve(n);
    for (int var = 0; var < n; ++var) {
        PoissonElement image = PoissonElement::zero(table);
        const int later = n - var - 1;
        if (later > 0) {
            const int terms = uniform(0, 2);
            for (int t = 0; t < terms; ++t) {
                // Monomial in the later variables with degree 1 mod d.
                const int degree = chance(0.7) ? 1 : d + 1;
                std::vector<Monomial::Entry> entries;
                int budget = degree;
                while (budget > 0) {
                    const int v = uniform(var + 1, n - 1);
                    const int e = uniform(1, budget);
                    entries.emplace_back(v, e);
                    budget -= e;
                }
                image += PoissonElement::term(table, Monomial::from_entries(std::move(entries)),
                                              nonzero_rational(4, 2));
            }
        }
        images.push_back(std::move(image));
    }
    return AmbientMap::full(table, std::move(images));
}

InvertiblePair random_elementary_automorphism(SeededRng& rng, const std::shared_ptr<const LyndonBasis>& table,
                                              int d, int max_shear_degree) {
    const int n = table->size();
    const int target = rng.uniform(0, n - 1);
    std::vector<PoissonElement> forward, inverse;
    for (int var = 0; var < n; ++var) {
        forward.push_back(PoissonElement::variable(table, var));
        inverse.push_back(PoissonElement::variable(table, var));
    }
    if (n > 1 && rng.chance(0.75)) {
        // Shear by a monomial in the other variables with degree 1 mod d.
        const Rational c = rng.nonzero_rational(3, 2);
        int degree = 1;
        if (max_shear_degree >= d + 1 && rng.chance(0.3)) degree = d + 1;
        std::vector<Monomial::Entry> entries;
        int budget = degree;
        while (budget > 0) {
            int v = rng.uniform(0, n - 2);
            if (v >= target) ++v;  // skip the sheared variable
            const int e = rng.uniform(1, budget);
            entries.emplace_back(v, e);
            budget -= e;
        }
        const PoissonElement shear =
            PoissonElement::term(table, Monomial::from_entries(std::move(entries)), c);
        forward[target] += shear;
        inverse[target] -= shear;
    } else {
        const Rational c = rng.nonzero_rational(3, 2);
        forward[target] *= c;
        inverse[target] *= Rational(1) / c;
    }
    return InvertiblePair{AmbientMap::full(table, std::move(forward)), AmbientMap::full(table, std::move(inverse))};
}

AmbientMap compose_morphisms(const AmbientMap& outer, const AmbientMap& inner) {
    std::vector<PoissonElement> images;
    images.reserve(inner.images.size());
    for (const auto& image : inner.images) images.push_back(apply_morphism(outer, image));
    AmbientMap out;
    out.table = inner.table;
    out.scope = inner.scope;
    out.images = std::move(images);
    return out;
}

InvertiblePair random_graded_automorphism(SeededRng& rng, const std::shared_ptr<const LyndonBasis>& table, int d,
                                          int max_factors, int max_total_degree) {
    while (true) {
        const int factors = rng.uniform(1, max_factors);
        InvertiblePair result = random_elementary_automorphism(rng, table, d, max_total_degree);
        for (int i = 1; i < factors; ++i) {
            InvertiblePair next = random_elementary_automorphism(rng, table, d, max_total_degree);
            result.forward = compose_morphisms(result.forward, next.forward);
            // (f . g)^-1 = g^-1 . f^-1
            result.inverse = compose_morphisms(next.inverse, result.inverse);
        }
        int degree = 0;
        for (const auto& image : result.forward.images)
            if (!image.is_zero()) degree = std::max(degree, image.weighted_degree());
        for (const auto& image : result.inverse.images)
            if (!image.is_zero()) degree = std::max(degree, image.weighted_degree());
        if (degree <= max_total_degree) return result;
    }
}

namespace {

AmbientMap prefix_map(const std::shared_ptr<const LyndonBasis>& table, std::vector<PoissonElement> images) {
    AmbientMap out;
    out.table = table;
    out.scope.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) out.scope[i] = static_cast<int>(i);
    out.images = std::move(images);
    return out;
}

}  // namespace

AmbientMap poisson_extension(const std::shared_ptr<const LyndonBasis>& table,
                             const std::vector<PoissonElement>& x_images, int up_to_degree) {
    if (static_cast<int>(x_images.size()) != table->n())
        throw InvalidInput("poisson extension needs one image per alphabet letter");
    const int cap = up_to_degree < 0 ? table->max_degree() : up_to_degree;
    std::vector<PoissonElement> images;
    for (int var = 0; var < table->size(); ++var) {
        const LyndonElement& e = table->element(var);
        if (e.degree > cap) break;  // indices are sorted by degree
        if (e.degree == 1)
            images.push_back(x_images[e.word[0]]);
        else
            images.push_back(poisson_bracket(images[e.left], images[e.right]));
    }
    return prefix_map(table, std::move(images));
}

AmbientMap poisson_derivation_extension(const std::shared_ptr<const LyndonBasis>& table,
                                        const std::vector<PoissonElement>& x_images, int up_to_degree) {
    if (static_cast<int>(x_images.size()) != table->n())
        throw InvalidInput("derivation extension needs one image per alphabet letter");
    const int cap = up_to_degree < 0 ? table->max_degree() : up_to_degree;
    std::vector<PoissonElement> images;
    for (int var = 0; var < table->size(); ++var) {
        const LyndonElement& e = table->element(var);
        if (e.degree > cap) break;
        if (e.degree == 1) {
            images.push_back(x_images[e.word[0]]);
        } else {
            const PoissonElement left = PoissonElement::variable(table, e.left);
            const PoissonElement right = PoissonElement::variable(table, e.right);
            images.push_back(poisson_bracket(images[e.left], right) + poisson_bracket(left, images[e.right]));
        }
    }
    return prefix_map(table, std::move(images));
}

AmbientMap inner_derivation(const std::shared_ptr<const LyndonBasis>& table, const PoissonElement& g,
                            int up_to_degree) {
    const int cap = up_to_degree < 0 ? table->max_degree() : up_to_degree;
    std::vector<PoissonElement> images;
    for (int var = 0; var < table->size(); ++var) {
        if (table->element(var).degree > cap) break;
        images.push_back(poisson_bracket(g, PoissonElement::variable(table, var)));
    }
    return prefix_map(table, std::move(images));
}

}  // namespace veronese
