#include <doctest.h>

#include "veronese/errors.hpp"
#include "veronese/expr.hpp"
#include "veronese/mapfile.hpp"
#include "veronese/sampling.hpp"

#include "support.hpp"

using namespace veronese;
using testkit::PE;

TEST_SUITE_BEGIN("cli-expr");

TEST_CASE("polynomial parsing") {
    CHECK(parse_polynomial("x1^2 + 2*x1*x2", 2) ==
          Polynomial::term(2, Monomial::variable(0, 2), 1) +
              Polynomial::term(2, Monomial::variable(0).times(Monomial::variable(1)), 2));
    CHECK(parse_polynomial(" x1 + 2 * x2 ", 2) == parse_polynomial("x1+2*x2", 2));
    const Polynomial q = parse_polynomial("3/2*x1 - 1/2", 1);
    CHECK(q.coefficient(Monomial::variable(0)) == Rational(3, 2));
    CHECK(q.coefficient(Monomial::one()) == Rational(-1, 2));
}

TEST_CASE("parenthesized powers and unary minus") {
    CHECK(parse_polynomial("(x1+x2)^2", 2) == parse_polynomial("x1^2 + 2*x1*x2 + x2^2", 2));
    CHECK(parse_polynomial("-x1 - 2", 1) == -(parse_polynomial("x1 + 2", 1)));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_polynomial("x1 +", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }
    CHECK_THROWS_AS(parse_polynomial("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 @ x2", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", 1), ParseError);
}

TEST_CASE("poisson brackets evaluate while parsing") {
    auto table = LyndonBasis::make(2, 4);
    CHECK(PE("{x1,x2}", table) == PoissonElement::variable(table, 2));
    CHECK(PE("{x1,x2}^2", table) == pow(PoissonElement::variable(table, 2), 2));
    CHECK(PE("{x1, x1*x2}", table) ==
          PoissonElement::variable(table, 0) * PoissonElement::variable(table, 2));
    CHECK_THROWS_AS(parse_polynomial("{x1,x2}", 2), ParseError);
}

TEST_CASE("bracket literals must be canonical") {
    auto table = LyndonBasis::make(2, 4);
    CHECK(PE("[x1,x2]", table) == PoissonElement::variable(table, 2));
    CHECK(PE("[[x1,x2],x2]", table) == PoissonElement::variable(table, 4));
    CHECK_THROWS_AS(PE("[x2,x1]", table), ParseError);          // not a Lyndon word
    CHECK_THROWS_AS(PE("[x1,[x2,x2]]", table), ParseError);     // inner word not Lyndon
    CHECK_THROWS_AS(PE("[[x1,[x1,x2]],x2]", table), ParseError);  // non-standard bracketing of 1122
    CHECK_THROWS_AS(parse_polynomial("[x1,x2]", 2), ParseError);  // needs a poisson context
}

TEST_CASE("garbage input raises parse errors, never crashes") {
    SeededRng rng(502);
    auto table = LyndonBasis::make(2, 4);
    const std::string alphabet = "x12+-*^()[]{}, /";
    int rejected = 0;
    for (int i = 0; i < 400; ++i) {
        std::string text;
        const int len = rng.uniform(1, 12);
        for (int k = 0; k < len; ++k) text += alphabet[rng.uniform(0, alphabet.size() - 1)];
        try {
            (void)parse_poisson(text, table);
        } catch (const ParseError&) {
            ++rejected;
        } catch (const DegreeOverflow&) {
            ++rejected;  // a syntactically fine bracket past the bound
        }
    }
    CHECK(rejected > 0);
}

TEST_CASE("print-parse identity on random elements") {
    SeededRng rng(501);
    auto table = LyndonBasis::make(2, 5);
    for (int i = 0; i < 150; ++i) {
        const Polynomial p = rng.polynomial(rng.uniform(1, 3), 5, 6);
        CHECK(parse_polynomial(to_string(p), p.arity()) == p);
        const PoissonElement f = rng.poisson(table, 5, 6);
        CHECK(parse_poisson(to_string(f), table) == f);
    }
}

TEST_CASE("map files parse, bind, and serialize back") {
    const std::string text =
        "# a triangular derivation\n"
        "context=poly n=2 d=2\n"
        "gen x1^2 -> 2*x1*x2\n"
        "gen x1*x2 -> x2^2\n"
        "gen x2^2 -> 0\n";
    const MapFile file = parse_map_file(text);
    CHECK(file.kind == ContextKind::Polynomial);
    CHECK(file.n == 2);
    CHECK(file.d == 2);
    const VeroneseDerivation der = bind_derivation(file);
    CHECK(der.images[0] == PE("2*x1*x2", der.gens->table()));
    const MapFile again = parse_map_file(write_derivation_file(der));
    const VeroneseDerivation der2 = bind_derivation(again);
    for (int i = 0; i < der.gens->size(); ++i) CHECK(der.images[i] == der2.images[i]);
}

TEST_CASE("map file validation errors") {
    CHECK_THROWS_AS(parse_map_file("context=poly n=2\ngen x1^2 -> 1\n"), ParseError);  // missing d
    CHECK_THROWS_AS(parse_map_file("context=poisson n=2 d=2\ngen x1^2 -> 1\n"), ParseError);  // missing bound
    CHECK_THROWS_AS(bind_derivation(parse_map_file("context=poly n=2 d=2\ngen x1^2 -> x1^2\n")),
                     InvalidInput);  // missing generators
    CHECK_THROWS_AS(bind_derivation(parse_map_file("context=poly n=2 d=2\n"
                                                    "gen x1^2 -> x1\n"
                                                    "gen x1*x2 -> 0\n"
                                                    "gen x2^2 -> 0\n")),
                     InvalidInput);  // image outside the subalgebra
    CHECK_THROWS_AS(bind_derivation(parse_map_file("context=poly n=2 d=2\n"
                                                    "gen x1^3 -> 0\n"
                                                    "gen x1*x2 -> 0\n"
                                                    "gen x2^2 -> 0\n")),
                     InvalidInput);  // x1^3 is not a generator
}

TEST_CASE("poisson map files accept bracket generators") {
    const std::string text =
        "context=poisson n=2 d=2 bound=4\n"
        "gen x1^2 -> 0\n"
        "gen x1*x2 -> 0\n"
        "gen x2^2 -> 0\n"
        "gen [x1,x2] -> 0\n"
        "gen x1*[x1,[x1,x2]] -> 0\n"
        "gen x1*[[x1,x2],x2] -> 0\n"
        "gen x2*[x1,[x1,x2]] -> 0\n"
        "gen x2*[[x1,x2],x2] -> 0\n"
        "gen [x1,[x1,[x1,x2]]] -> 0\n"
        "gen [x1,[[x1,x2],x2]] -> 0\n"
        "gen [[[x1,x2],x2],x2] -> 0\n";
    const VeroneseDerivation der = bind_derivation(parse_map_file(text));
    CHECK(der.gens->size() == 11);
    for (const auto& image : der.images) CHECK(image.is_zero());
}

TEST_CASE("automorphism files carry the inverse section") {
    const std::string text =
        "context=poly n=2 d=2\n"
        "gen x1^2 -> x1^2\n"
        "gen x1*x2 -> x1*x2 + x1^2\n"
        "gen x2^2 -> x2^2 + 2*x1*x2 + x1^2\n"
        "inverse\n"
        "gen x1^2 -> x1^2\n"
        "gen x1*x2 -> x1*x2 - x1^2\n"
        "gen x2^2 -> x2^2 - 2*x1*x2 + x1^2\n";
    const VeroneseAutomorphism aut = bind_automorphism(parse_map_file(text));
    REQUIRE(aut.inverse_images.has_value());
    CHECK(verify_quotient_kernel(aut) == Rational(1));
    const VeroneseAutomorphism again = bind_automorphism(parse_map_file(write_automorphism_file(aut)));
    REQUIRE(again.inverse_images.has_value());
    for (int i = 0; i < aut.gens->size(); ++i) {
        CHECK(aut.images[i] == again.images[i]);
        CHECK((*aut.inverse_images)[i] == (*again.inverse_images)[i]);
    }
}

TEST_CASE("ambient map files bind against bracket variables") {
    const std::string text =
        "context=poisson n=2 d=2 bound=4\n"
        "var x1 -> x2\n"
        "var x2 -> 0\n"
        "var [x1,x2] -> 0\n"
        "var [x1,[x1,x2]] -> 0\n"
        "var [[x1,x2],x2] -> 0\n"
        "var [x1,[x1,[x1,x2]]] -> 0\n"
        "var [x1,[[x1,x2],x2]] -> 0\n"
        "var [[[x1,x2],x2],x2] -> 0\n";
    const MapFile file = parse_map_file(text);
    const AmbientMap map = bind_ambient_map(file);
    auto table = map.table;
    CHECK(map.image(0) == PE("x2", table));
    CHECK(map.image(2).is_zero());
    CHECK(map.scope.size() == 8);
}

TEST_CASE("lift reports round-trip through the parser") {
    auto gens = VeroneseGeneratorSet::polynomial(2, 2);
    auto table = gens->table();
    const VeroneseDerivation der = make_derivation(
        gens, {PE("2*x1*x2", table), PE("x2^2", table), PoissonElement::zero(table)});
    const LiftOutcome outcome = lift_derivation(der);
    REQUIRE(outcome.lifted);
    const nlohmann::json report = lift_report(*gens, outcome);
    CHECK(report["status"] == "lifted");
    for (const auto& row : report["images"]) {
        const std::string var = row["variable"].get<std::string>();
        const std::string image = row["image"]["text"].get<std::string>();
        const PoissonElement parsed = PE(image, table);
        const PoissonElement roundtrip = PE(to_string(parsed), table);
        CHECK(parsed == roundtrip);
        if (var == "x1") CHECK(parsed == PE("x2", table));
        if (var == "x2") CHECK(parsed.is_zero());
    }
}

TEST_SUITE_END();
