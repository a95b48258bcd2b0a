#include "veronese/poisson.hpp"

#include <algorithm>

#include "veronese/errors.hpp"

namespace veronese {

PoissonElement::PoissonElement(std::shared_ptr<const LyndonBasis> table, Polynomial poly)
    : table_(std::move(table)), poly_(std::move(poly)) {
    if (!table_) throw KernelError("poisson element needs a basis table");
    if (poly_.arity() != table_->size()) throw ArityMismatch("polynomial arity does not match the basis table");
}

PoissonElement PoissonElement::zero(std::shared_ptr<const LyndonBasis> table) {
    const int arity = table->size();
    return PoissonElement(std::move(table), Polynomial::zero(arity));
}

PoissonElement PoissonElement::constant(std::shared_ptr<const LyndonBasis> table, Rational value) {
    const int arity = table->size();
    return PoissonElement(std::move(table), Polynomial::constant(arity, std::move(value)));
}

PoissonElement PoissonElement::variable(std::shared_ptr<const LyndonBasis> table, int index) {
    const int arity = table->size();
    return PoissonElement(std::move(table), Polynomial::variable(arity, index));
}

PoissonElement PoissonElement::term(std::shared_ptr<const LyndonBasis> table, Monomial m, Rational c) {
    const int arity = table->size();
    return PoissonElement(std::move(table), Polynomial::term(arity, std::move(m), std::move(c)));
}

PoissonElement PoissonElement::from_lie(std::shared_ptr<const LyndonBasis> table, const LieCombination& c) {
    const int arity = table->size();
    Polynomial p(arity);
    for (const auto& [index, coeff] : c.terms) p += Polynomial::term(arity, Monomial::variable(index), coeff);
    return PoissonElement(std::move(table), std::move(p));
}

void PoissonElement::require_same_table(const PoissonElement& other) const {
    if (!table_ || !other.table_) throw KernelError("uninitialized poisson element");
    if (!table_->same_table(*other.table_)) throw ArityMismatch("operands use different basis tables");
}

int weighted_degree(const Monomial& m, const LyndonBasis& table) {
    int deg = 0;
    for (const auto& [var, exp] : m.entries()) deg += exp * table.element(var).degree;
    return deg;
}

int PoissonElement::weighted_degree() const {
    if (is_zero()) throw KernelError("weighted degree of zero");
    int deg = Polynomial::kZeroDegree;
    for (const auto& [m, c] : poly_.terms()) deg = std::max(deg, veronese::weighted_degree(m, *table_));
    return deg;
}

bool PoissonElement::is_d_homogeneous(int d, int residue) const {
    if (d < 1) throw KernelError("modulus must be positive");
    const int target = ((residue % d) + d) % d;
    for (const auto& [m, c] : poly_.terms())
        if (veronese::weighted_degree(m, *table_) % d != target) return false;
    return true;
}

bool PoissonElement::is_homogeneous() const {
    if (is_zero()) return true;
    int deg = -1;
    for (const auto& [m, c] : poly_.terms()) {
        const int w = veronese::weighted_degree(m, *table_);
        if (deg < 0) deg = w;
        if (w != deg) return false;
    }
    return true;
}

PoissonElement& PoissonElement::operator+=(const PoissonElement& other) {
    require_same_table(other);
    poly_ += other.poly_;
    return *this;
}

PoissonElement& PoissonElement::operator-=(const PoissonElement& other) {
    require_same_table(other);
    poly_ -= other.poly_;
    return *this;
}

PoissonElement& PoissonElement::operator*=(const PoissonElement& other) {
    require_same_table(other);
    poly_ *= other.poly_;
    return *this;
}

PoissonElement& PoissonElement::operator*=(const Rational& s) {
    poly_ *= s;
    return *this;
}

PoissonElement operator-(const PoissonElement& a) { return PoissonElement(a.table(), -a.poly()); }

bool operator==(const PoissonElement& a, const PoissonElement& b) {
    if (!a.table_ || !b.table_) return !a.table_ && !b.table_;
    return a.table_->same_table(*b.table_) && a.poly_ == b.poly_;
}

PoissonElement poisson_bracket(const PoissonElement& f, const PoissonElement& g) {
    if (!f.table() || !g.table()) throw KernelError("uninitialized poisson element");
    if (!f.table()->same_table(*g.table())) throw ArityMismatch("operands use different basis tables");
    const auto& table = *f.table();
    // Variables actually present in each operand.
    std::vector<int> support_f, support_g;
    {
        std::vector<bool> seen(table.size(), false);
        for (const auto& [m, c] : f.poly().terms())
            for (const auto& [var, exp] : m.entries())
                if (!seen[var]) {
                    seen[var] = true;
                    support_f.push_back(var);
                }
        std::fill(seen.begin(), seen.end(), false);
        for (const auto& [m, c] : g.poly().terms())
            for (const auto& [var, exp] : m.entries())
                if (!seen[var]) {
                    seen[var] = true;
                    support_g.push_back(var);
                }
    }
    PoissonElement out = PoissonElement::zero(f.table());
    for (int i : support_f) {
        const Polynomial dfi = derivative(f.poly(), i);
        if (dfi.is_zero()) continue;
        for (int j : support_g) {
            if (i == j) continue;  // {e_i, e_i} = 0
            const Polynomial dgj = derivative(g.poly(), j);
            if (dgj.is_zero()) continue;
            const LieCombination eij = table.bracket(i, j);
            if (eij.is_zero()) continue;
            out += PoissonElement(f.table(), dfi * dgj) * PoissonElement::from_lie(f.table(), eij);
        }
    }
    return out;
}

std::vector<PoissonElement> grade_poisson(const PoissonElement& f, int d) {
    if (d < 2) throw KernelError("grading requires d >= 2");
    std::vector<PoissonElement> parts;
    parts.reserve(d);
    std::vector<Polynomial> polys(d, Polynomial::zero(f.poly().arity()));
    for (const auto& [m, c] : f.poly().terms())
        polys[weighted_degree(m, *f.table()) % d] += Polynomial::term(f.poly().arity(), m, c);
    for (auto& p : polys) parts.emplace_back(f.table(), std::move(p));
    return parts;
}

PoissonElement pow(const PoissonElement& f, int k) { return PoissonElement(f.table(), pow(f.poly(), k)); }

PoissonElement derivative(const PoissonElement& f, int var) {
    return PoissonElement(f.table(), derivative(f.poly(), var));
}

Division divide_exact(const PoissonElement& p, const PoissonElement& q) {
    if (!p.table()->same_table(*q.table())) throw ArityMismatch("operands use different basis tables");
    return divide_exact(p.poly(), q.poly());
}

PoissonElement gcd(const PoissonElement& p, const PoissonElement& q) {
    if (!p.table()->same_table(*q.table())) throw ArityMismatch("operands use different basis tables");
    return PoissonElement(p.table(), gcd(p.poly(), q.poly()));
}

std::string to_string(const PoissonElement& f) {
    const auto table = f.table();
    return to_string(f.poly(), [table](int var) { return table->name(var); });
}

PoissonFraction::PoissonFraction(PoissonElement num, PoissonElement den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = PoissonElement::one(den_.table());
        return;
    }
    const PoissonElement g = gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
        Division dn = divide_exact(num_, g);
        Division dd = divide_exact(den_, g);
        if (!dn.exact || !dd.exact) throw KernelError("fraction reduction failed");
        num_ = PoissonElement(num_.table(), std::move(dn.quotient));
        den_ = PoissonElement(den_.table(), std::move(dd.quotient));
    }
    const Rational lead = den_.poly().leading_term().second;
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

bool PoissonFraction::is_polynomial() const { return den_.is_constant() && den_.constant_value() == 1; }

PoissonFraction& PoissonFraction::operator+=(const PoissonFraction& other) {
    *this = PoissonFraction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
    return *this;
}

PoissonFraction& PoissonFraction::operator-=(const PoissonFraction& other) {
    *this = PoissonFraction(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
    return *this;
}

PoissonFraction& PoissonFraction::operator*=(const PoissonFraction& other) {
    *this = PoissonFraction(num_ * other.num_, den_ * other.den_);
    return *this;
}

PoissonFraction fraction_bracket(const PoissonFraction& x, const PoissonFraction& y) {
    const PoissonElement& a = x.num();
    const PoissonElement& b = x.den();
    const PoissonElement& c = y.num();
    const PoissonElement& d = y.den();
    PoissonElement num = poisson_bracket(a, c) * b * d - poisson_bracket(a, d) * b * c -
                         poisson_bracket(b, c) * a * d + poisson_bracket(b, d) * a * c;
    PoissonElement den = b * b * d * d;
    return PoissonFraction(std::move(num), std::move(den));
}

std::string to_string(const PoissonFraction& f) {
    if (f.is_polynomial()) return to_string(f.num());
    return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

AmbientMap AmbientMap::full(std::shared_ptr<const LyndonBasis> table, std::vector<PoissonElement> images) {
    if (static_cast<int>(images.size()) != table->size())
        throw InvalidInput("ambient map needs one image per basis element");
    AmbientMap out;
    out.table = std::move(table);
    out.scope.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) out.scope[i] = static_cast<int>(i);
    out.images = std::move(images);
    return out;
}

bool AmbientMap::covers(int var) const {
    return std::binary_search(scope.begin(), scope.end(), var);
}

bool AmbientMap::covers_support(const PoissonElement& f) const {
    for (const auto& [m, c] : f.poly().terms())
        for (const auto& [var, exp] : m.entries())
            if (!covers(var)) return false;
    return true;
}

const PoissonElement& AmbientMap::image(int var) const {
    auto it = std::lower_bound(scope.begin(), scope.end(), var);
    if (it == scope.end() || *it != var) throw KernelError("variable not covered by the map");
    return images[static_cast<std::size_t>(it - scope.begin())];
}

PoissonElement apply_derivation(const AmbientMap& map, const PoissonElement& f) {
    PoissonElement out = PoissonElement::zero(f.table());
    std::vector<int> support;
    {
        std::vector<bool> seen(f.table()->size(), false);
        for (const auto& [m, c] : f.poly().terms())
            for (const auto& [var, exp] : m.entries())
                if (!seen[var]) {
                    seen[var] = true;
                    support.push_back(var);
                }
    }
    for (int var : support) {
        const Polynomial df = derivative(f.poly(), var);
        if (df.is_zero()) continue;
        out += PoissonElement(f.table(), df) * map.image(var);
    }
    return out;
}

PoissonFraction apply_derivation(const AmbientMap& map, const PoissonFraction& f) {
    const PoissonElement sa = apply_derivation(map, f.num());
    const PoissonElement sb = apply_derivation(map, f.den());
    return PoissonFraction(sa * f.den() - f.num() * sb, f.den() * f.den());
}

PoissonElement apply_morphism(const AmbientMap& map, const PoissonElement& f) {
    PoissonElement out = PoissonElement::zero(f.table());
    for (const auto& [m, c] : f.poly().terms()) {
        PoissonElement t = PoissonElement::constant(f.table(), c);
        for (const auto& [var, exp] : m.entries()) t *= pow(map.image(var), exp);
        out += t;
    }
    return out;
}

}  // namespace veronese
