#include <doctest.h>

#include <atomic>
#include <thread>

#include "veronese/errors.hpp"
#include "veronese/lyndon.hpp"
#include "veronese/sampling.hpp"

#include "support.hpp"

using namespace veronese;

namespace {

LieCombination basis_term(int index, Rational c = 1) {
    LieCombination out;
    out.add(index, c);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("free-lie");

TEST_CASE("basis enumeration up to degree 2 over two letters") {
    auto table = LyndonBasis::make(2, 2);
    REQUIRE(table->size() == 3);
    CHECK(table->name(0) == "x1");
    CHECK(table->name(1) == "x2");
    CHECK(table->name(2) == "[x1,x2]");
}

TEST_CASE("one letter gives only the generator") {
    auto table = LyndonBasis::make(1, 5);
    REQUIRE(table->size() == 1);
    CHECK(table->name(0) == "x1");
}

TEST_CASE("degree three adds the two standard bracketings") {
    auto table = LyndonBasis::make(2, 3);
    REQUIRE(table->size() == 5);
    CHECK(table->name(3) == "[x1,[x1,x2]]");
    CHECK(table->name(4) == "[[x1,x2],x2]");
    CHECK(table->element(3).word == Word{0, 0, 1});
    CHECK(table->element(4).word == Word{0, 1, 1});
}

TEST_CASE("generators come first and enumeration is deterministic") {
    auto a = LyndonBasis::make(3, 6);
    auto b = LyndonBasis::make(3, 6);
    REQUIRE(a->size() == b->size());
    for (int i = 0; i < a->size(); ++i) {
        CHECK(a->element(i).word == b->element(i).word);
        if (i < 3) CHECK(a->element(i).word == Word{static_cast<std::uint8_t>(i)});
    }
}

TEST_CASE("standard factorization takes the longest proper Lyndon suffix") {
    for (int n : {2, 3}) {
        auto table = LyndonBasis::make(n, 6);
        for (const auto& e : table->elements()) {
            if (e.degree < 2) continue;
            const Word& right = table->element(e.right).word;
            // the right factor is a Lyndon suffix...
            Word suffix(e.word.end() - right.size(), e.word.end());
            CHECK(suffix == right);
            CHECK(is_lyndon(right));
            // ...and no longer proper suffix is Lyndon
            for (std::size_t len = right.size() + 1; len < e.word.size(); ++len) {
                Word longer(e.word.end() - len, e.word.end());
                CHECK_FALSE(is_lyndon(longer));
            }
        }
    }
}

TEST_CASE("dimensions match the necklace count") {
    for (int n : {2, 3}) {
        auto table = LyndonBasis::make(n, 8);
        for (int m = 1; m <= 8; ++m) CHECK(table->count_of_degree(m) == testkit::necklace_count(n, m));
    }
}

TEST_CASE("bracket examples") {
    auto table = LyndonBasis::make(2, 4);
    CHECK(table->bracket(0, 1) == basis_term(2));        // [x1,x2]
    CHECK(table->bracket(0, 0).is_zero());               // alternating
    CHECK(table->bracket(2, 0) == basis_term(3, -1));    // [[x1,x2],x1] = -[x1,[x1,x2]]
    CHECK(table->bracket(2, 1) == basis_term(4));        // [[x1,x2],x2]
}

TEST_CASE("bracket expansion agrees with the associative embedding") {
    for (int n : {2, 3}) {
        auto table = LyndonBasis::make(n, 6);
        std::map<int, testkit::AssocPoly> cache;
        for (int i = 0; i < table->size(); ++i) {
            for (int j = i; j < table->size(); ++j) {
                if (table->element(i).degree + table->element(j).degree > 5) continue;
                const LieCombination expansion = table->bracket(i, j);
                const testkit::AssocPoly direct = testkit::assoc_bracket(
                    testkit::assoc_of_basis(*table, i, cache), testkit::assoc_of_basis(*table, j, cache));
                CHECK(testkit::assoc_of_combination(*table, expansion, cache) == direct);
            }
        }
    }
}

TEST_CASE("oracle decomposition recovers the same expansion") {
    auto table = LyndonBasis::make(2, 5);
    std::map<int, testkit::AssocPoly> cache;
    const int i = table->index_of(Word{0, 1});     // [x1,x2]
    const int j = table->index_of(Word{0, 0, 1});  // [x1,[x1,x2]]
    REQUIRE(i >= 0);
    REQUIRE(j >= 0);
    const testkit::AssocPoly direct = testkit::assoc_bracket(testkit::assoc_of_basis(*table, i, cache),
                                                             testkit::assoc_of_basis(*table, j, cache));
    LieCombination from_oracle;
    REQUIRE(testkit::lyndon_decompose(*table, direct, from_oracle, cache));
    CHECK(from_oracle == table->bracket(i, j));
}

TEST_CASE("antisymmetry on random combinations") {
    auto table = LyndonBasis::make(3, 8);
    SeededRng rng(201);
    const int small = [&] {
        int count = 0;
        while (count < table->size() && table->element(count).degree <= 4) ++count;
        return count - 1;
    }();
    for (int i = 0; i < 120; ++i) {
        LieCombination a, b;
        for (int t = 0; t < 2; ++t) a.add(rng.uniform(0, small), rng.rational());
        for (int t = 0; t < 2; ++t) b.add(rng.uniform(0, small), rng.rational());
        CHECK(lie_bracket(*table, a, b) == -lie_bracket(*table, b, a));
    }
}

TEST_CASE("jacobi identity on random homogeneous triples") {
    for (int n : {2, 3}) {
        auto table = LyndonBasis::make(n, 7);
        SeededRng rng(202 + n);
        std::vector<int> by_degree[4];
        for (int i = 0; i < table->size(); ++i)
            if (table->element(i).degree <= 3) by_degree[table->element(i).degree].push_back(i);
        for (int trial = 0; trial < 80; ++trial) {
            int degs[3];
            do {
                for (int& deg : degs) deg = rng.uniform(1, 3);
            } while (degs[0] + degs[1] + degs[2] > 7);
            auto pick = [&](int deg) {
                const auto& pool = by_degree[deg];
                return pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)];
            };
            LieCombination a = basis_term(pick(degs[0]), rng.nonzero_rational());
            LieCombination b = basis_term(pick(degs[1]), rng.nonzero_rational());
            LieCombination c = basis_term(pick(degs[2]), rng.nonzero_rational());
            LieCombination jac = lie_bracket(*table, lie_bracket(*table, a, b), c);
            jac += lie_bracket(*table, lie_bracket(*table, b, c), a);
            jac += lie_bracket(*table, lie_bracket(*table, c, a), b);
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("bracket terms are multihomogeneous") {
    auto table = LyndonBasis::make(3, 6);
    for (int i = 0; i < table->size(); ++i) {
        for (int j = 0; j < table->size(); ++j) {
            if (table->element(i).degree + table->element(j).degree > 6) continue;
            std::vector<int> expected = table->element(i).multidegree;
            for (int k = 0; k < 3; ++k) expected[k] += table->element(j).multidegree[k];
            for (const auto& [index, c] : table->bracket(i, j).terms)
                CHECK(table->element(index).multidegree == expected);
        }
    }
}

TEST_CASE("the shared table serves concurrent readers") {
    auto table = LyndonBasis::make(2, 7);
    // reference expansions computed single-threaded on a twin table
    auto reference = LyndonBasis::make(2, 7);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < table->size(); ++i)
        for (int j = 0; j < table->size(); ++j)
            if (table->element(i).degree + table->element(j).degree <= 7) pairs.emplace_back(i, j);
    std::vector<LieCombination> expected(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
        expected[k] = reference->bracket(pairs[k].first, pairs[k].second);
    std::atomic<int> mismatches{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t k = t; k < pairs.size(); k += 4) {
                if (!(table->bracket(pairs[k].first, pairs[k].second) == expected[k])) ++mismatches;
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(mismatches == 0);
}

TEST_CASE("brackets past the bound overflow") {
    auto table = LyndonBasis::make(2, 3);
    const int deg2 = table->index_of(Word{0, 1});
    const int deg3 = table->index_of(Word{0, 0, 1});
    CHECK_THROWS_AS(table->bracket(deg2, deg3), DegreeOverflow);
    CHECK(table->bracket(deg2, deg2).is_zero());  // [e,e] = 0 needs no lookup
}

TEST_SUITE_END();
