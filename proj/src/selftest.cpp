#include "veronese/selftest.hpp"

#include <functional>
#include <string>

#include "veronese/expr.hpp"
#include "veronese/lift.hpp"
#include "veronese/sampling.hpp"

namespace veronese {

namespace {

struct Suite {
    std::ostream& out;
    int failures = 0;

    void run(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string detail;
        try {
            ok = body();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        out << (ok ? "  ok   " : "  FAIL ") << name;
        if (!ok && !detail.empty()) out << "  (" << detail << ")";
        out << "\n";
        if (!ok) ++failures;
    }
};

}  // namespace

int run_selftest(std::uint64_t seed, std::ostream& out) {
    out << "selftest seed=" << seed << "\n";
    Suite suite{out};

    suite.run("polynomial ring axioms", [&] {
        SeededRng rng(seed + 1);
        for (int i = 0; i < 40; ++i) {
            const int arity = rng.uniform(1, 3);
            const Polynomial a = rng.polynomial(arity, 4, 4);
            const Polynomial b = rng.polynomial(arity, 4, 4);
            const Polynomial c = rng.polynomial(arity, 4, 4);
            if (!(a * (b + c) == a * b + a * c)) return false;
            if (!(a * b == b * a)) return false;
            if (!((a + b) + c == a + (b + c))) return false;
        }
        return true;
    });

    suite.run("exact division inverts multiplication", [&] {
        SeededRng rng(seed + 2);
        for (int i = 0; i < 40; ++i) {
            const int arity = rng.uniform(1, 3);
            const Polynomial p = rng.polynomial(arity, 4, 4);
            const Polynomial q = rng.nonzero_polynomial(arity, 3, 3);
            Division div = divide_exact(p * q, q);
            if (!div.exact || !(div.quotient == p)) return false;
        }
        return true;
    });

    suite.run("gcd divides both operands", [&] {
        SeededRng rng(seed + 3);
        for (int i = 0; i < 25; ++i) {
            const int arity = rng.uniform(1, 3);
            const Polynomial p = rng.nonzero_polynomial(arity, 3, 3);
            const Polynomial q = rng.nonzero_polynomial(arity, 3, 3);
            const Polynomial g = gcd(p, q);
            if (!divide_exact(p, g).exact || !divide_exact(q, g).exact) return false;
        }
        return true;
    });

    suite.run("grading reconstructs the input", [&] {
        SeededRng rng(seed + 4);
        for (int i = 0; i < 40; ++i) {
            const int arity = rng.uniform(1, 3);
            const int d = rng.uniform(2, 4);
            const Polynomial p = rng.polynomial(arity, 6, 6);
            GradedDecomposition parts = grade(p, d);
            Polynomial sum(arity);
            for (const auto& part : parts.parts) sum += part;
            if (!(sum == p)) return false;
        }
        return true;
    });

    suite.run("d-th roots of d-th powers", [&] {
        SeededRng rng(seed + 5);
        for (int i = 0; i < 20; ++i) {
            const int arity = rng.uniform(1, 2);
            const int d = rng.uniform(2, 3);
            const Polynomial p = rng.nonzero_polynomial(arity, 2, 3);
            auto root = dth_root(pow(p, d), d);
            if (!root || !(pow(*root, d) == pow(p, d))) return false;
        }
        return true;
    });

    suite.run("lie bracket antisymmetry and jacobi", [&] {
        auto table = LyndonBasis::make(2, 9);
        SeededRng rng(seed + 6);
        for (int i = 0; i < 25; ++i) {
            LieCombination a, b, c;
            a.add(rng.uniform(0, 4), rng.rational());
            b.add(rng.uniform(0, 4), rng.rational());
            c.add(rng.uniform(0, 2), rng.rational());
            LieCombination ab = lie_bracket(*table, a, b);
            LieCombination ba = lie_bracket(*table, b, a);
            if (!(ab == -ba)) return false;
            LieCombination jac = lie_bracket(*table, ab, c);
            jac += lie_bracket(*table, lie_bracket(*table, b, c), a);
            jac += lie_bracket(*table, lie_bracket(*table, c, a), b);
            if (!jac.is_zero()) return false;
        }
        return true;
    });

    suite.run("poisson jacobi and leibniz", [&] {
        auto table = LyndonBasis::make(2, 6);
        SeededRng rng(seed + 7);
        for (int i = 0; i < 15; ++i) {
            const PoissonElement f = rng.poisson(table, 2, 3);
            const PoissonElement g = rng.poisson(table, 2, 3);
            const PoissonElement h = rng.poisson(table, 2, 3);
            PoissonElement jac = poisson_bracket(poisson_bracket(f, g), h);
            jac += poisson_bracket(poisson_bracket(g, h), f);
            jac += poisson_bracket(poisson_bracket(h, f), g);
            if (!jac.is_zero()) return false;
            const PoissonElement leib = poisson_bracket(f, g * h);
            if (!(leib == g * poisson_bracket(f, h) + poisson_bracket(f, g) * h)) return false;
        }
        return true;
    });

    suite.run("fraction derivation law", [&] {
        auto table = LyndonBasis::make(2, 8);
        SeededRng rng(seed + 8);
        for (int i = 0; i < 8; ++i) {
            // A genuine Poisson derivation, from images of the free generators.
            std::vector<PoissonElement> x_images;
            for (int v = 0; v < 2; ++v) x_images.push_back(rng.homogeneous_poisson(table, 1, 2));
            const AmbientMap der = poisson_derivation_extension(table, x_images);
            const PoissonFraction x(rng.poisson(table, 2, 2), rng.nonzero_poisson(table, 1, 1));
            const PoissonFraction y(rng.poisson(table, 2, 2), rng.nonzero_poisson(table, 1, 1));
            const PoissonFraction lhs = apply_derivation(der, fraction_bracket(x, y));
            PoissonFraction rhs = fraction_bracket(apply_derivation(der, x), y);
            rhs += fraction_bracket(x, apply_derivation(der, y));
            if (!(lhs == rhs)) return false;
        }
        return true;
    });

    suite.run("derivation lift round trip", [&] {
        SeededRng rng(seed + 9);
        for (int i = 0; i < 10; ++i) {
            const int n = rng.uniform(2, 3);
            const int d = rng.uniform(2, 3);
            auto table = LyndonBasis::make(n, 1);
            auto gens = VeroneseGeneratorSet::polynomial(n, d);
            const AmbientMap s = rng.graded_derivation(table, d, 2 * d + 1, 3);
            const LiftOutcome lifted = lift_derivation(restrict_derivation(gens, s));
            if (!lifted.lifted) return false;
            for (std::size_t k = 0; k < s.scope.size(); ++k)
                if (!(lifted.map.images[k] == s.images[k])) return false;
        }
        return true;
    });

    suite.run("automorphism lift round trip", [&] {
        SeededRng rng(seed + 10);
        for (int i = 0; i < 8; ++i) {
            const int n = rng.uniform(2, 3);
            const int d = rng.uniform(2, 3);
            auto table = LyndonBasis::make(n, 1);
            auto gens = VeroneseGeneratorSet::polynomial(n, d);
            const InvertiblePair pair = random_graded_automorphism(rng, table, d, 3, 5);
            const VeroneseAutomorphism aut = restrict_automorphism(gens, pair.forward, pair.inverse);
            const Rational lambda = verify_quotient_kernel(aut);
            Rational power = 1;
            for (int k = 0; k < d; ++k) power *= lambda;
            if (power != 1) return false;
        }
        return true;
    });

    suite.run("parser round trip", [&] {
        SeededRng rng(seed + 11);
        auto table = LyndonBasis::make(2, 4);
        for (int i = 0; i < 50; ++i) {
            const PoissonElement f = rng.poisson(table, 4, 5);
            if (!(parse_poisson(to_string(f), table) == f)) return false;
            const Polynomial p = rng.polynomial(2, 5, 5);
            if (!(parse_polynomial(to_string(p), 2) == p)) return false;
        }
        return true;
    });

    out << (suite.failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return suite.failures;
}

}  // namespace veronese
