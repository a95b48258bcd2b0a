#include <doctest.h>

#include "veronese/errors.hpp"
#include "veronese/poisson.hpp"
#include "veronese/sampling.hpp"

#include "support.hpp"

using namespace veronese;
using testkit::PE;

TEST_SUITE_BEGIN("free-poisson");

TEST_CASE("bracket of generators is the basis element") {
    auto table = LyndonBasis::make(2, 4);
    CHECK(poisson_bracket(PE("x1", table), PE("x2", table)) == PE("[x1,x2]", table));
    const PoissonElement f = PE("x1*x2 + [x1,x2]^2", table);
    CHECK(poisson_bracket(f, f).is_zero());
}

TEST_CASE("bracket of d-th powers of basis elements") {
    auto table = LyndonBasis::make(2, 8);
    for (int d : {2, 3}) {
        for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            if (table->element(i).degree + table->element(j).degree > table->max_degree()) continue;
            const PoissonElement ei = PoissonElement::variable(table, i);
            const PoissonElement ej = PoissonElement::variable(table, j);
            const PoissonElement lhs = poisson_bracket(pow(ei, d), pow(ej, d));
            const PoissonElement rhs =
                Rational(d * d) * pow(ei, d - 1) * pow(ej, d - 1) * poisson_bracket(ei, ej);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("weighted degree and polynomial length are different functions") {
    auto table = LyndonBasis::make(2, 4);
    const PoissonElement u = PE("x1*[x1,x2]", table);
    CHECK(u.weighted_degree() == 3);
    CHECK(u.poly().leading_term().first.total_degree() == 2);  // two basis factors
    CHECK_THROWS_AS(PoissonElement::zero(table).weighted_degree(), KernelError);
    SUBCASE("additive under multiplication") {
        const PoissonElement v = PE("[x1,x2]^2", table);
        CHECK((u * v).weighted_degree() == u.weighted_degree() + v.weighted_degree());
    }
}

TEST_CASE("degree-class membership") {
    auto table = LyndonBasis::make(2, 4);
    CHECK(PE("x1*x2 + [x1,x2]", table).is_d_homogeneous(2, 0));
    CHECK_FALSE(PE("x1 + x1*x2", table).is_d_homogeneous(2, 0));
    CHECK(PoissonElement::zero(table).is_d_homogeneous(3, 1));
}

TEST_CASE("poisson grading examples") {
    auto table = LyndonBasis::make(2, 4);
    auto parts = grade_poisson(PE("x1 + x1*x2", table), 2);
    CHECK(parts[0] == PE("x1*x2", table));
    CHECK(parts[1] == PE("x1", table));
    auto bracket_part = grade_poisson(PE("[x1,x2]", table), 2);
    CHECK(bracket_part[0] == PE("[x1,x2]", table));
    CHECK(bracket_part[1].is_zero());
}

TEST_CASE("poisson grading reconstructs random elements") {
    auto table = LyndonBasis::make(2, 5);
    SeededRng rng(301);
    for (int i = 0; i < 80; ++i) {
        const int d = rng.uniform(2, 4);
        const PoissonElement f = rng.poisson(table, 5, 6);
        auto parts = grade_poisson(f, d);
        PoissonElement sum = PoissonElement::zero(table);
        for (int r = 0; r < d; ++r) {
            CHECK(parts[r].is_d_homogeneous(d, r));
            sum += parts[r];
        }
        CHECK(sum == f);
    }
}

TEST_CASE("jacobi and leibniz on random elements") {
    for (int n : {2, 3}) {
        auto table = LyndonBasis::make(n, 6);
        SeededRng rng(302 + n);
        for (int i = 0; i < 60; ++i) {
            const PoissonElement f = rng.poisson(table, 2, 3);
            const PoissonElement g = rng.poisson(table, 2, 3);
            const PoissonElement h = rng.poisson(table, 2, 3);
            PoissonElement jac = poisson_bracket(poisson_bracket(f, g), h);
            jac += poisson_bracket(poisson_bracket(g, h), f);
            jac += poisson_bracket(poisson_bracket(h, f), g);
            CHECK(jac.is_zero());
            CHECK(poisson_bracket(f, g * h) == g * poisson_bracket(f, h) + poisson_bracket(f, g) * h);
        }
    }
}

TEST_CASE("nonzero brackets of homogeneous elements add degrees") {
    auto table = LyndonBasis::make(2, 6);
    SeededRng rng(303);
    for (int i = 0; i < 60; ++i) {
        const int da = rng.uniform(1, 3);
        const int db = rng.uniform(1, 3);
        const PoissonElement f = rng.homogeneous_poisson(table, da, 3);
        const PoissonElement g = rng.homogeneous_poisson(table, db, 3);
        if (f.is_zero() || g.is_zero()) continue;
        const PoissonElement fg = poisson_bracket(f, g);
        if (!fg.is_zero()) {
            CHECK(fg.is_homogeneous());
            CHECK(fg.weighted_degree() == da + db);
        }
    }
}

TEST_CASE("grading is compatible with products and brackets") {
    auto table = LyndonBasis::make(2, 6);
    SeededRng rng(304);
    for (int i = 0; i < 40; ++i) {
        const int d = rng.uniform(2, 3);
        const PoissonElement f = rng.poisson(table, 3, 4);
        const PoissonElement g = rng.poisson(table, 3, 4);
        auto pf = grade_poisson(f, d);
        auto pg = grade_poisson(g, d);
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                CHECK((pf[a] * pg[b]).is_d_homogeneous(d, (a + b) % d));
                CHECK(poisson_bracket(pf[a], pg[b]).is_d_homogeneous(d, (a + b) % d));
            }
        }
    }
}

TEST_CASE("fraction bracket restricts to the polynomial bracket") {
    auto table = LyndonBasis::make(2, 6);
    SeededRng rng(305);
    for (int i = 0; i < 30; ++i) {
        const PoissonElement a = rng.poisson(table, 3, 3);
        const PoissonElement c = rng.poisson(table, 3, 3);
        const PoissonFraction lhs = fraction_bracket(PoissonFraction::of(a), PoissonFraction::of(c));
        CHECK(lhs == PoissonFraction::of(poisson_bracket(a, c)));
    }
}

TEST_CASE("fraction bracket worked example") {
    auto table = LyndonBasis::make(2, 4);
    const PoissonFraction x(PE("x2", table), PE("x1", table));
    const PoissonFraction y = PoissonFraction::of(PE("x1", table));
    const PoissonFraction expected(PE("-[x1,x2]", table), PE("x1", table));
    CHECK(fraction_bracket(x, y) == expected);
    SUBCASE("alternating") { CHECK(fraction_bracket(x, x).is_zero()); }
}

TEST_CASE("fraction reduction is scale invariant") {
    auto table = LyndonBasis::make(2, 5);
    SeededRng rng(306);
    for (int i = 0; i < 40; ++i) {
        const PoissonElement a = rng.poisson(table, 3, 3);
        const PoissonElement b = rng.nonzero_poisson(table, 3, 3);
        const PoissonElement c = rng.nonzero_poisson(table, 2, 2);
        CHECK(PoissonFraction(a * c, b * c) == PoissonFraction(a, b));
    }
    CHECK_THROWS_AS(PoissonFraction(PE("x1", table), PoissonElement::zero(table)), DivisionByZero);
}

TEST_CASE("derivations extend to fractions by the quotient rule") {
    auto table = LyndonBasis::make(2, 8);
    SeededRng rng(307);
    std::vector<PoissonElement> x_images;
    for (int v = 0; v < 2; ++v) x_images.push_back(rng.homogeneous_poisson(table, 1, 2));
    const AmbientMap der = poisson_derivation_extension(table, x_images);
    SUBCASE("polynomial fractions reduce to the plain application") {
        const PoissonElement a = rng.poisson(table, 3, 3);
        CHECK(apply_derivation(der, PoissonFraction::of(a)) == PoissonFraction::of(apply_derivation(der, a)));
    }
    SUBCASE("reciprocals") {
        const PoissonElement b = rng.nonzero_poisson(table, 2, 2);
        const PoissonFraction lhs = apply_derivation(der, PoissonFraction(PoissonElement::one(table), b));
        CHECK(lhs == PoissonFraction(-apply_derivation(der, b), b * b));
    }
}

TEST_CASE("extended derivation satisfies the bracket law on fractions") {
    auto table = LyndonBasis::make(2, 8);
    SeededRng rng(308);
    for (int i = 0; i < 25; ++i) {
        std::vector<PoissonElement> x_images;
        for (int v = 0; v < 2; ++v) x_images.push_back(rng.homogeneous_poisson(table, 1, 2));
        const AmbientMap der = poisson_derivation_extension(table, x_images);
        const PoissonFraction x(rng.poisson(table, 2, 2), rng.nonzero_poisson(table, 1, 1));
        const PoissonFraction y(rng.poisson(table, 2, 2), rng.nonzero_poisson(table, 1, 1));
        const PoissonFraction lhs = apply_derivation(der, fraction_bracket(x, y));
        PoissonFraction rhs = fraction_bracket(apply_derivation(der, x), y);
        rhs += fraction_bracket(x, apply_derivation(der, y));
        // compare after clearing denominators
        CHECK(lhs.num() * rhs.den() == rhs.num() * lhs.den());
    }
}

TEST_CASE("degree overflow propagates out of brackets") {
    auto table = LyndonBasis::make(2, 3);
    const PoissonElement f = PE("[x1,x2]", table);
    const PoissonElement g = PE("[x1,[x1,x2]]", table);
    CHECK_THROWS_AS(poisson_bracket(f, g), DegreeOverflow);
}

TEST_CASE("operands must share the basis table") {
    auto t1 = LyndonBasis::make(2, 3);
    auto t2 = LyndonBasis::make(2, 4);
    CHECK_THROWS_AS(PE("x1", t1) + PE("x1", t2), ArityMismatch);
}

TEST_SUITE_END();
