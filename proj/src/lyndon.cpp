#include "veronese/lyndon.hpp"

#include <algorithm>
#include <cassert>

#include "veronese/errors.hpp"

namespace veronese {

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
    }
    return true;
}

std::vector<Word> lyndon_words(int n, int max_len) {
    if (n < 1) throw KernelError("alphabet must have at least one letter");
    if (max_len < 1) throw KernelError("maximum length must be positive");
    // Duval's generator emits Lyndon words in lexicographic order; bucket
    // them by length to get the (degree, lex) enumeration.
    std::vector<std::vector<Word>> by_length(max_len + 1);
    Word w{0};
    while (true) {
        if (static_cast<int>(w.size()) <= max_len) by_length[w.size()].push_back(w);
        Word t;
        t.reserve(max_len);
        for (int i = 0; i < max_len; ++i) t.push_back(w[i % w.size()]);
        while (!t.empty() && t.back() == n - 1) t.pop_back();
        if (t.empty()) break;
        ++t.back();
        w = std::move(t);
    }
    std::vector<Word> out;
    for (auto& bucket : by_length)
        for (auto& word : bucket) out.push_back(std::move(word));
    return out;
}

LieCombination& LieCombination::add(int index, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

LieCombination& LieCombination::operator+=(const LieCombination& other) {
    for (const auto& [i, c] : other.terms) add(i, c);
    return *this;
}

LieCombination& LieCombination::operator*=(const Rational& s) {
    if (s == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [i, c] : terms) c *= s;
    return *this;
}

LieCombination operator-(const LieCombination& a) {
    LieCombination out = a;
    for (auto& [i, c] : out.terms) c = -c;
    return out;
}

std::shared_ptr<const LyndonBasis> LyndonBasis::make(int n, int max_degree) {
    auto basis = std::shared_ptr<LyndonBasis>(new LyndonBasis());
    basis->n_ = n;
    basis->max_degree_ = max_degree;
    auto words = lyndon_words(n, max_degree);
    basis->elems_.reserve(words.size());
    for (int idx = 0; idx < static_cast<int>(words.size()); ++idx) {
        LyndonElement e;
        e.word = std::move(words[idx]);
        e.index = idx;
        e.degree = static_cast<int>(e.word.size());
        e.multidegree.assign(n, 0);
        for (auto letter : e.word) ++e.multidegree[letter];
        basis->index_.emplace(e.word, idx);
        basis->elems_.push_back(std::move(e));
    }
    // Standard factorization: the right factor is the longest proper Lyndon
    // suffix, and the left factor is then Lyndon as well.
    for (auto& e : basis->elems_) {
        if (e.degree < 2) continue;
        for (std::size_t split = 1; split < e.word.size(); ++split) {
            Word suffix(e.word.begin() + split, e.word.end());
            if (!is_lyndon(suffix)) continue;
            Word prefix(e.word.begin(), e.word.begin() + split);
            e.left = basis->index_of(prefix);
            e.right = basis->index_of(suffix);
            assert(e.left >= 0 && e.right >= 0);
            break;
        }
    }
    basis->names_.reserve(basis->elems_.size());
    for (const auto& e : basis->elems_) {
        if (e.degree == 1)
            basis->names_.push_back("x" + std::to_string(e.word[0] + 1));
        else
            basis->names_.push_back("[" + basis->names_[e.left] + "," + basis->names_[e.right] + "]");
    }
    return basis;
}

int LyndonBasis::count_of_degree(int degree) const {
    int count = 0;
    for (const auto& e : elems_) count += e.degree == degree ? 1 : 0;
    return count;
}

int LyndonBasis::index_of(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
}

LieCombination LyndonBasis::bracket(int i, int j) const {
    const auto& wi = elems_.at(i).word;
    const auto& wj = elems_.at(j).word;
    if (wi == wj) return {};
    if (std::lexicographical_compare(wi.begin(), wi.end(), wj.begin(), wj.end())) return bracket_ordered(i, j);
    return -bracket_ordered(j, i);
}

// Expansion of [e_i, e_j] for word(i) < word(j), by rewriting along the
// standard factorization: if (w_i, w_j) is itself a standard pair the
// product is the basis element for the concatenation, otherwise split
// w_i = u1 u2 and apply the Jacobi identity
//   [[u1,u2], v] = [u1,[u2,v]] + [[u1,v], u2].
// Within a fixed total degree the concatenation strictly increases in the
// word order except on the left-peel step, which shortens the first factor,
// so the recursion is well-founded.
LieCombination LyndonBasis::bracket_ordered(int i, int j) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find({i, j});
        if (it != cache_.end()) return it->second;
    }
    const LyndonElement& u = elems_[i];
    const LyndonElement& v = elems_[j];
    const int total = u.degree + v.degree;
    if (total > max_degree_) throw DegreeOverflow(total, max_degree_);

    LieCombination result;
    const bool standard_pair =
        u.degree == 1 || !std::lexicographical_compare(elems_[u.right].word.begin(), elems_[u.right].word.end(),
                                                       v.word.begin(), v.word.end());
    if (standard_pair) {
        Word w = u.word;
        w.insert(w.end(), v.word.begin(), v.word.end());
        const int idx = index_of(w);
        assert(idx >= 0);
        result.add(idx, 1);
    } else {
        const int u1 = u.left;
        const int u2 = u.right;
        for (const auto& [k, c] : bracket(u2, j).terms) {
            LieCombination inner = bracket(u1, k);
            inner *= c;
            result += inner;
        }
        for (const auto& [k, c] : bracket(u1, j).terms) {
            LieCombination inner = bracket(k, u2);
            inner *= c;
            result += inner;
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(std::make_pair(i, j), std::move(result));
    return it->second;
}

LieCombination lie_bracket(const LyndonBasis& basis, const LieCombination& a, const LieCombination& b) {
    LieCombination out;
    for (const auto& [i, ca] : a.terms) {
        for (const auto& [j, cb] : b.terms) {
            LieCombination part = basis.bracket(i, j);
            part *= ca * cb;
            out += part;
        }
    }
    return out;
}

}  // namespace veronese
