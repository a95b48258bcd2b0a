#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace veronese {

/// Sparse exponent vector over indeterminates indexed from 0.
/// Entries are sorted by variable index and never store a zero exponent.
class Monomial {
public:
    using Entry = std::pair<int, int>;  // (variable, exponent > 0)

    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial variable(int var, int exp = 1);
    /// Builds from arbitrary entries: sorts, merges duplicates, drops zeros.
    static Monomial from_entries(std::vector<Entry> entries);

    bool is_one() const { return entries_.empty(); }
    int total_degree() const;
    int exponent(int var) const;
    /// Largest variable index present, or -1 for the trivial monomial.
    int max_variable() const;
    const std::vector<Entry>& entries() const { return entries_; }

    Monomial times(const Monomial& other) const;
    Monomial pow(int k) const;
    bool divides(const Monomial& other) const;
    /// this / divisor, or nullopt when not exactly divisible.
    std::optional<Monomial> divided_by(const Monomial& divisor) const;
    Monomial gcd(const Monomial& other) const;
    /// Copy with the given variable removed.
    Monomial without(int var) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;
};

/// Graded lexicographic order with x0 > x1 > ...: compares total degree
/// first, then the exponent at the smallest differing variable.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

}  // namespace veronese
