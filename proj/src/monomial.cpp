#include "veronese/monomial.hpp"

#include <algorithm>

#include "veronese/errors.hpp"

namespace veronese {

Monomial Monomial::variable(int var, int exp) {
    if (var < 0) throw KernelError("negative variable index");
    if (exp < 0) throw KernelError("negative exponent");
    Monomial m;
    if (exp > 0) m.entries_.emplace_back(var, exp);
    return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    Monomial m;
    for (const auto& [var, exp] : entries) {
        if (var < 0) throw KernelError("negative variable index");
        if (exp < 0) throw KernelError("negative exponent");
        if (exp == 0) continue;
        if (!m.entries_.empty() && m.entries_.back().first == var)
            m.entries_.back().second += exp;
        else
            m.entries_.emplace_back(var, exp);
    }
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [var, exp] : entries_) d += exp;
    return d;
}

int Monomial::exponent(int var) const {
    for (const auto& [v, e] : entries_)
        if (v == var) return e;
    return 0;
}

int Monomial::max_variable() const { return entries_.empty() ? -1 : entries_.back().first; }

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            out.entries_.push_back(*b++);
        } else {
            out.entries_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::pow(int k) const {
    if (k < 0) throw KernelError("negative exponent");
    Monomial out;
    if (k == 0) return out;
    out.entries_ = entries_;
    for (auto& [var, exp] : out.entries_) exp *= k;
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    auto b = other.entries_.begin();
    for (const auto& [var, exp] : entries_) {
        while (b != other.entries_.end() && b->first < var) ++b;
        if (b == other.entries_.end() || b->first != var || b->second < exp) return false;
    }
    return true;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& divisor) const {
    if (!divisor.divides(*this)) return std::nullopt;
    Monomial out;
    auto b = divisor.entries_.begin();
    for (const auto& [var, exp] : entries_) {
        int e = exp;
        if (b != divisor.entries_.end() && b->first == var) {
            e -= b->second;
            ++b;
        }
        if (e > 0) out.entries_.emplace_back(var, e);
    }
    return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
    Monomial out;
    auto b = other.entries_.begin();
    for (const auto& [var, exp] : entries_) {
        while (b != other.entries_.end() && b->first < var) ++b;
        if (b != other.entries_.end() && b->first == var)
            out.entries_.emplace_back(var, std::min(exp, b->second));
    }
    return out;
}

Monomial Monomial::without(int var) const {
    Monomial out;
    for (const auto& e : entries_)
        if (e.first != var) out.entries_.push_back(e);
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) return da < db;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        const int va = ia != a.entries().end() ? ia->first : -1;
        const int vb = ib != b.entries().end() ? ib->first : -1;
        // Larger exponent at the smallest differing variable wins.
        if (va == vb) {
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        } else if (vb == -1 || (va != -1 && va < vb)) {
            return false;  // a has a positive exponent where b has zero
        } else {
            return true;
        }
    }
    return false;
}

}  // namespace veronese
