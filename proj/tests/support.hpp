#pragma once

// Shared helpers and independent oracles for the test suites. The oracles
// deliberately avoid the kernel's own expansion paths: dimensions come from
// the classical necklace count, and bracket expansions are checked against
// the embedding of the free Lie algebra into the free associative algebra.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "veronese/expr.hpp"
#include "veronese/lyndon.hpp"
#include "veronese/poisson.hpp"
#include "veronese/polynomial.hpp"

namespace testkit {

using veronese::LieCombination;
using veronese::LyndonBasis;
using veronese::Rational;
using veronese::Word;

inline long long necklace_count(int n, int m) {
    auto mobius = [](int k) {
        int result = 1;
        for (int p = 2; p * p <= k; ++p) {
            if (k % p == 0) {
                k /= p;
                if (k % p == 0) return 0;
                result = -result;
            }
        }
        if (k > 1) result = -result;
        return result;
    };
    long long sum = 0;
    for (int k = 1; k <= m; ++k) {
        if (m % k != 0) continue;
        long long power = 1;
        for (int i = 0; i < m / k; ++i) power *= n;
        sum += mobius(k) * power;
    }
    return sum / m;
}

/// Element of the free associative algebra: word -> coefficient.
using AssocPoly = std::map<Word, Rational>;

inline void assoc_add(AssocPoly& into, const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = into.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

inline AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            assoc_add(out, w, ca * cb);
        }
    }
    return out;
}

inline AssocPoly assoc_bracket(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out = assoc_mul(a, b);
    for (const auto& [w, c] : assoc_mul(b, a)) assoc_add(out, w, -c);
    return out;
}

/// Associative image of a basis element, following its bracketing tree.
inline const AssocPoly& assoc_of_basis(const LyndonBasis& table, int index, std::map<int, AssocPoly>& cache) {
    auto it = cache.find(index);
    if (it != cache.end()) return it->second;
    const auto& e = table.element(index);
    AssocPoly value;
    if (e.degree == 1) {
        assoc_add(value, e.word, 1);
    } else {
        value = assoc_bracket(assoc_of_basis(table, e.left, cache), assoc_of_basis(table, e.right, cache));
    }
    return cache.emplace(index, std::move(value)).first->second;
}

inline AssocPoly assoc_of_combination(const LyndonBasis& table, const LieCombination& c,
                                      std::map<int, AssocPoly>& cache) {
    AssocPoly out;
    for (const auto& [index, coeff] : c.terms)
        for (const auto& [w, wc] : assoc_of_basis(table, index, cache)) assoc_add(out, w, wc * coeff);
    return out;
}

/// Decomposes an associative polynomial that happens to be a Lie element
/// into the Lyndon basis, by peeling the lexicographically smallest word;
/// triangularity makes that word Lyndon with the basis coefficient.
/// Returns false when the input is not a combination of basis images.
inline bool lyndon_decompose(const LyndonBasis& table, AssocPoly value, LieCombination& out,
                             std::map<int, AssocPoly>& cache) {
    out = LieCombination{};
    while (!value.empty()) {
        const Word word = value.begin()->first;    // copies: the loop below
        const Rational coeff = value.begin()->second;  // erases map nodes
        const int index = table.index_of(word);
        if (index < 0) return false;
        out.add(index, coeff);
        for (const auto& [w, c] : assoc_of_basis(table, index, cache)) assoc_add(value, w, -(c * coeff));
    }
    return true;
}

inline veronese::Polynomial P(const std::string& text, int n) { return veronese::parse_polynomial(text, n); }

inline veronese::PoissonElement PE(const std::string& text, const std::shared_ptr<const LyndonBasis>& table) {
    return veronese::parse_poisson(text, table);
}

}  // namespace testkit
