#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "veronese/rational.hpp"

namespace veronese {

using Word = std::vector<std::uint8_t>;  // letters 0..n-1

/// True iff the word is strictly smaller than every proper suffix.
bool is_lyndon(const Word& w);

/// All Lyndon words over n letters with length <= max_len,
/// ordered by (length, lexicographic).
std::vector<Word> lyndon_words(int n, int max_len);

/// One element of the Lyndon basis of the free Lie algebra: a Lyndon word
/// together with its standard bracketing [left, right], where the right
/// factor is the longest proper Lyndon suffix.
struct LyndonElement {
    Word word;
    int index = -1;
    int left = -1;   // -1 for single letters
    int right = -1;
    int degree = 0;                // word length
    std::vector<int> multidegree;  // letter counts
};

/// Linear combination of basis elements, indexed into a LyndonBasis.
struct LieCombination {
    std::map<int, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    LieCombination& add(int index, const Rational& c);
    LieCombination& operator+=(const LieCombination& other);
    LieCombination& operator*=(const Rational& s);
    friend LieCombination operator-(const LieCombination& a);
    friend bool operator==(const LieCombination&, const LieCombination&) = default;
};

/// The multihomogeneous Lyndon basis e_1, e_2, ... of the free Lie algebra
/// on x_1..x_n, truncated at a degree bound. Indices are assigned in
/// (degree, lexicographic) order, so e_i = x_i for i <= n and the numbering
/// is stable across runs. Brackets of basis pairs are expanded in the basis
/// and memoized; the table is safe for shared concurrent reads.
class LyndonBasis {
public:
    static std::shared_ptr<const LyndonBasis> make(int n, int max_degree);

    int n() const { return n_; }
    int max_degree() const { return max_degree_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const LyndonElement& element(int index) const { return elems_.at(index); }
    const std::vector<LyndonElement>& elements() const { return elems_; }
    int count_of_degree(int degree) const;
    /// Index of a word, or -1 when absent (not Lyndon or beyond the bound).
    int index_of(const Word& w) const;
    /// Nested bracket notation, e.g. "[x1,[x1,x2]]".
    const std::string& name(int index) const { return names_.at(index); }

    /// Expansion of [e_i, e_j] in the basis. Throws DegreeOverflow when the
    /// result would need words longer than the bound.
    LieCombination bracket(int i, int j) const;

    bool same_table(const LyndonBasis& other) const {
        return n_ == other.n_ && max_degree_ == other.max_degree_;
    }

private:
    LyndonBasis() = default;
    LieCombination bracket_ordered(int i, int j) const;  // word(i) < word(j)

    int n_ = 0;
    int max_degree_ = 0;
    std::vector<LyndonElement> elems_;
    std::map<Word, int> index_;
    std::vector<std::string> names_;
    mutable std::map<std::pair<int, int>, LieCombination> cache_;
    mutable std::mutex cache_mutex_;
};

/// Bilinear bracket of two combinations, expanded in the basis.
LieCombination lie_bracket(const LyndonBasis& basis, const LieCombination& a, const LieCombination& b);

}  // namespace veronese
