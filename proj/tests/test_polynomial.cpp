#include <doctest.h>

#include "veronese/errors.hpp"
#include "veronese/polynomial.hpp"
#include "veronese/rational_function.hpp"
#include "veronese/sampling.hpp"

#include "support.hpp"

using namespace veronese;
using testkit::P;

TEST_SUITE_BEGIN("poly-core");

TEST_CASE("ring identities") {
    CHECK(P("(x1+x2)*(x1-x2)", 2) == P("x1^2 - x2^2", 2));
    const Polynomial p = P("3*x1^2*x2 - x2 + 1/2", 2);
    CHECK(p * Polynomial::one(2) == p);
    CHECK(P("(x1+1)^2", 1) == P("x1^2 + 2*x1 + 1", 1));
}

TEST_CASE("arity mismatch is rejected") {
    CHECK_THROWS_AS(P("x1", 1) + P("x1", 2), ArityMismatch);
    CHECK_THROWS_AS(P("x1", 1) * P("x2", 2), ArityMismatch);
}

TEST_CASE("exact division examples") {
    SUBCASE("monomial quotient") {
        Division div = divide_exact(P("x1^2*x2", 2), P("x1", 2));
        CHECK(div.exact);
        CHECK(div.quotient == P("x1*x2", 2));
    }
    SUBCASE("non-divisible input carries a remainder witness") {
        Division div = divide_exact(P("x1^2 + 1", 1), P("x1", 1));
        CHECK_FALSE(div.exact);
        CHECK_FALSE(div.remainder.is_zero());
    }
    SUBCASE("coefficients divide too") {
        Division div = divide_exact(P("2*x1^3*x2", 2), P("2*x1^2", 2));
        CHECK(div.exact);
        CHECK(div.quotient * P("2*x1^2", 2) == P("2*x1^3*x2", 2));
        CHECK(div.quotient == P("x1*x2", 2));
    }
    SUBCASE("zero dividend") {
        Division div = divide_exact(Polynomial::zero(2), P("x1", 2));
        CHECK(div.exact);
        CHECK(div.quotient.is_zero());
    }
    CHECK_THROWS_AS(divide_exact(P("x1", 1), Polynomial::zero(1)), DivisionByZero);
}

TEST_CASE("division inverts multiplication on random operands") {
    SeededRng rng(101);
    for (int i = 0; i < 200; ++i) {
        const int arity = rng.uniform(1, 3);
        const Polynomial p = rng.polynomial(arity, 6, 5);
        const Polynomial q = rng.nonzero_polynomial(arity, 6, 5);
        Division div = divide_exact(p * q, q);
        REQUIRE(div.exact);
        REQUIRE(div.quotient == p);
    }
}

TEST_CASE("gcd examples") {
    CHECK(gcd(P("x1^2 - x2^2", 2), P("x1 - x2", 2)) == P("x1 - x2", 2));
    CHECK(gcd(P("x1", 2), P("x2", 2)) == Polynomial::one(2));
    const Polynomial g = gcd(P("x1^2*x2 + x1*x2^2", 2), P("x1*x2", 2));
    CHECK(g == P("x1*x2", 2));
    CHECK(divide_exact(P("x1^2*x2 + x1*x2^2", 2), g).exact);
    CHECK(divide_exact(P("x1*x2", 2), g).exact);
    CHECK_THROWS_AS(gcd(Polynomial::zero(1), Polynomial::zero(1)), KernelError);
}

TEST_CASE("gcd divides both operands and scales multiplicatively") {
    SeededRng rng(102);
    for (int i = 0; i < 60; ++i) {
        const int arity = rng.uniform(1, 3);
        const Polynomial p = rng.nonzero_polynomial(arity, 4, 4);
        const Polynomial q = rng.nonzero_polynomial(arity, 4, 4);
        const Polynomial r = rng.nonzero_polynomial(arity, 3, 3);
        const Polynomial g = gcd(p, q);
        CHECK(divide_exact(p, g).exact);
        CHECK(divide_exact(q, g).exact);
        CHECK(gcd(p * r, q * r) == monic(g * r));
    }
}

TEST_CASE("gcd is maximal: the cofactors are coprime") {
    SeededRng rng(107);
    for (int i = 0; i < 50; ++i) {
        const int arity = rng.uniform(1, 3);
        const Polynomial p = rng.nonzero_polynomial(arity, 4, 4);
        const Polynomial q = rng.nonzero_polynomial(arity, 4, 4);
        const Polynomial g = gcd(p, q);
        const Polynomial pp = divide_exact(p, g).quotient;
        const Polynomial qq = divide_exact(q, g).quotient;
        const Polynomial h = gcd(pp, qq);
        CHECK(h.is_constant());
    }
}

TEST_CASE("reduce_fraction examples and canonical form") {
    CHECK(reduce_fraction(P("x1^2*x2", 2), P("x1*x2", 2)) == reduce_fraction(P("x1", 2), P("1", 2)));
    CHECK(reduce_fraction(P("x1^2 - x2^2", 2), P("x1 - x2", 2)).num() == P("x1 + x2", 2));
    const RationalFunction f = reduce_fraction(P("x2*x1", 2), P("x1^2", 2));
    CHECK(f.num() == P("x2", 2));
    CHECK(f.den() == P("x1", 2));
    // cross-multiplied identity
    CHECK(f.num() * P("x1^2", 2) == P("x2*x1", 2) * f.den());
    // denominator normalized monic
    const RationalFunction g = reduce_fraction(P("x1", 2), P("2*x2", 2));
    CHECK(g.den() == P("x2", 2));
    CHECK(g.num() == P("1/2*x1", 2));
    CHECK_THROWS_AS(reduce_fraction(P("x1", 1), Polynomial::zero(1)), DivisionByZero);
}

TEST_CASE("fraction reduction ignores common factors") {
    SeededRng rng(103);
    for (int i = 0; i < 60; ++i) {
        const int arity = rng.uniform(1, 3);
        const Polynomial a = rng.polynomial(arity, 3, 3);
        const Polynomial b = rng.nonzero_polynomial(arity, 3, 3);
        const Polynomial c = rng.nonzero_polynomial(arity, 2, 2);
        CHECK(reduce_fraction(a * c, b * c) == reduce_fraction(a, b));
    }
}

TEST_CASE("grading examples") {
    GradedDecomposition parts = grade(P("x1^2 + x1 + 1", 1), 2);
    CHECK(parts.parts[0] == P("x1^2 + 1", 1));
    CHECK(parts.parts[1] == P("x1", 1));

    GradedDecomposition zero = grade(Polynomial::zero(2), 3);
    CHECK(zero.parts.size() == 3);
    for (const auto& part : zero.parts) CHECK(part.is_zero());

    GradedDecomposition three = grade(P("x1^3 + x1^2*x2 + x1*x2", 2), 3);
    CHECK(three.parts[0] == P("x1^3 + x1^2*x2", 2));
    CHECK(three.parts[1].is_zero());
    CHECK(three.parts[2] == P("x1*x2", 2));
    Polynomial sum(2);
    for (const auto& part : three.parts) sum += part;
    CHECK(sum == P("x1^3 + x1^2*x2 + x1*x2", 2));

    CHECK_THROWS_AS(grade(P("x1", 1), 1), KernelError);
}

TEST_CASE("grading is linear and congruent on random input") {
    SeededRng rng(104);
    for (int i = 0; i < 100; ++i) {
        const int arity = rng.uniform(1, 3);
        const int d = rng.uniform(2, 4);
        const Polynomial p = rng.polynomial(arity, 6, 6);
        const Polynomial q = rng.polynomial(arity, 6, 6);
        const GradedDecomposition pp = grade(p, d);
        const GradedDecomposition qq = grade(q, d);
        const GradedDecomposition sum = grade(p + q, d);
        Polynomial reconstructed(arity);
        for (int r = 0; r < d; ++r) {
            reconstructed += pp.parts[r];
            CHECK(sum.parts[r] == pp.parts[r] + qq.parts[r]);
            for (const auto& [m, c] : pp.parts[r].terms()) CHECK(m.total_degree() % d == r);
        }
        CHECK(reconstructed == p);
    }
}

TEST_CASE("d-th root examples") {
    CHECK(*dth_root(P("x1^2 + 2*x1*x2 + x2^2", 2), 2) == P("x1 + x2", 2));
    CHECK_FALSE(dth_root(P("2*x1^2", 1), 2).has_value());
    CHECK(*dth_root(P("(x1+x2)^6", 2), 3) == P("(x1+x2)^2", 2));
    SUBCASE("even roots have a positive leading coefficient") {
        CHECK(*dth_root(P("(x1+x2)^2", 2), 2) == P("x1 + x2", 2));
        CHECK(*dth_root(P("(-x1-x2)^2", 2), 2) == P("x1 + x2", 2));
    }
    SUBCASE("odd roots keep the sign") {
        CHECK(*dth_root(P("-8*x1^3", 1), 3) == P("-2*x1", 1));
    }
    SUBCASE("non-powers are rejected") {
        CHECK_FALSE(dth_root(P("x1^2 + x2", 2), 2).has_value());
        CHECK_FALSE(dth_root(P("x1^2 + x2^2", 2), 2).has_value());
        CHECK_FALSE(dth_root(P("x1^3", 1), 2).has_value());
    }
    CHECK_THROWS_AS(dth_root(Polynomial::zero(1), 2), KernelError);
}

TEST_CASE("d-th roots of d-th powers on random input") {
    SeededRng rng(105);
    for (int i = 0; i < 80; ++i) {
        const int arity = rng.uniform(1, 3);
        const int d = rng.uniform(2, 4);
        const Polynomial p = rng.nonzero_polynomial(arity, 3, 3);
        const Polynomial power = pow(p, d);
        auto root = dth_root(power, d);
        REQUIRE(root.has_value());
        CHECK(pow(*root, d) == power);
    }
}

TEST_CASE("substitution examples") {
    CHECK(substitute(P("x1^2 + x2", 2), {P("x1", 2), P("x1 + x2", 2)}) == P("x1^2 + x1 + x2", 2));
    const Polynomial p = P("x1^3*x2 - 2*x2^2", 2);
    CHECK(substitute(p, {P("x1", 2), P("x2", 2)}) == p);
    CHECK(substitute(P("x1*x2", 2), {P("x2", 2), P("x1", 2)}) == P("x1*x2", 2));
    CHECK_THROWS_AS(substitute(P("x1", 2), {P("x1", 1)}), ArityMismatch);
}

TEST_CASE("substitution composes and is a ring map") {
    SeededRng rng(106);
    for (int i = 0; i < 40; ++i) {
        const int arity = rng.uniform(1, 3);
        const Polynomial p = rng.polynomial(arity, 3, 3);
        const Polynomial q = rng.polynomial(arity, 3, 3);
        std::vector<Polynomial> f, g, fg;
        for (int v = 0; v < arity; ++v) f.push_back(rng.polynomial(arity, 2, 2));
        for (int v = 0; v < arity; ++v) g.push_back(rng.polynomial(arity, 2, 2));
        for (int v = 0; v < arity; ++v) fg.push_back(substitute(f[v], g));
        CHECK(substitute(substitute(p, f), g) == substitute(p, fg));
        CHECK(substitute(p + q, f) == substitute(p, f) + substitute(q, f));
        CHECK(substitute(p * q, f) == substitute(p, f) * substitute(q, f));
    }
}

TEST_CASE("zero polynomial degree sentinel") {
    CHECK(Polynomial::zero(2).total_degree() == Polynomial::kZeroDegree);
    CHECK(P("5", 2).total_degree() == 0);
    CHECK(P("x1*x2^3", 2).total_degree() == 4);
}

TEST_CASE("canonical text form is graded-lex ordered") {
    CHECK(to_string(P("1 + x1 + x1^2", 1)) == "x1^2 + x1 + 1");
    CHECK(to_string(P("x2^2 - x1*x2", 2)) == "-x1*x2 + x2^2");
    CHECK(to_string(P("1/2 - x1", 1)) == "-x1 + 1/2");
    CHECK(to_string(Polynomial::zero(3)) == "0");
}

TEST_SUITE_END();
