#include "veronese/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

void require_same_arity(const Polynomial& a, const Polynomial& b) {
    if (a.arity() != b.arity())
        throw ArityMismatch("operands have arities " + std::to_string(a.arity()) + " and " +
                            std::to_string(b.arity()));
}

std::string default_var_name(int var) { return "x" + std::to_string(var + 1); }

}  // namespace

Polynomial::Polynomial(int arity) : arity_(arity) {
    if (arity < 0) throw KernelError("negative arity");
}

Polynomial Polynomial::constant(int arity, Rational value) {
    Polynomial p(arity);
    if (value != 0) p.terms_.emplace(Monomial::one(), std::move(value));
    return p;
}

Polynomial Polynomial::variable(int arity, int var) {
    if (var < 0 || var >= arity) throw KernelError("variable index out of range");
    return term(arity, Monomial::variable(var), 1);
}

Polynomial Polynomial::term(int arity, Monomial m, Rational c) {
    Polynomial p(arity);
    if (m.max_variable() >= arity) throw KernelError("monomial variable out of range");
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw KernelError("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return kZeroDegree;
    // Leading term under graded-lex has maximal total degree.
    return terms_.begin()->first.total_degree();
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw KernelError("zero polynomial has no leading term");
    return *terms_.begin();
}

const Rational& Polynomial::coefficient(const Monomial& m) const {
    static const Rational zero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_arity(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_arity(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    require_same_arity(a, b);
    Polynomial out(a.arity());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = multiply(*this, other);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial out = a;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Division divide_exact(const Polynomial& p, const Polynomial& q) {
    require_same_arity(p, q);
    if (q.is_zero()) throw DivisionByZero("division by the zero polynomial");
    Division result;
    result.quotient = Polynomial::zero(p.arity());
    Polynomial rest = p;
    const auto& [qm, qc] = q.leading_term();
    while (!rest.is_zero()) {
        const auto& [rm, rc] = rest.leading_term();
        auto m = rm.divided_by(qm);
        if (!m) {
            result.exact = false;
            result.remainder = std::move(rest);
            return result;
        }
        Polynomial t = Polynomial::term(p.arity(), *m, rc / qc);
        result.quotient += t;
        rest -= t * q;
    }
    result.exact = true;
    result.remainder = Polynomial::zero(p.arity());
    return result;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    Polynomial out = p;
    out *= Rational(1) / p.leading_term().second;
    return out;
}

Polynomial pow(const Polynomial& p, int k) {
    if (k < 0) throw KernelError("negative polynomial power");
    Polynomial result = Polynomial::one(p.arity());
    Polynomial base = p;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial derivative(const Polynomial& p, int var) {
    Polynomial out(p.arity());
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(var);
        if (e == 0) continue;
        auto reduced = m.divided_by(Monomial::variable(var));
        out += Polynomial::term(p.arity(), *reduced, c * e);
    }
    return out;
}

// --- gcd -------------------------------------------------------------------
//
// Strategy: split off the common monomial content (cheap and frequent in the
// lifting code, where denominators are monomials), then run a subresultant
// pseudo-remainder sequence in the largest variable, recursing into the
// coefficients for contents.

namespace {

// Univariate view in one variable with polynomial coefficients.
struct UniPoly {
    std::vector<Polynomial> coeff;  // index = exponent of the main variable

    int degree() const {
        for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
            if (!coeff[i].is_zero()) return i;
        return -1;
    }
    const Polynomial& lc() const { return coeff[degree()]; }
    bool is_zero() const { return degree() < 0; }
    void trim() {
        while (!coeff.empty() && coeff.back().is_zero()) coeff.pop_back();
    }
};

UniPoly decompose(const Polynomial& p, int var) {
    UniPoly u;
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(var);
        if (static_cast<int>(u.coeff.size()) <= e) u.coeff.resize(e + 1, Polynomial::zero(p.arity()));
        u.coeff[e] += Polynomial::term(p.arity(), m.without(var), c);
    }
    u.trim();
    return u;
}

Polynomial recompose(const UniPoly& u, int var, int arity) {
    Polynomial out(arity);
    for (int e = 0; e < static_cast<int>(u.coeff.size()); ++e) {
        if (u.coeff[e].is_zero()) continue;
        out += u.coeff[e] * Polynomial::term(arity, Monomial::variable(var, e), 1);
    }
    return out;
}

UniPoly uni_scale(const UniPoly& u, const Polynomial& f) {
    UniPoly out;
    out.coeff.reserve(u.coeff.size());
    for (const auto& c : u.coeff) out.coeff.push_back(c * f);
    out.trim();
    return out;
}

// u -= shift(f * v) by `offset` powers of the main variable.
void uni_sub_shifted(UniPoly& u, const Polynomial& f, const UniPoly& v, int offset, int arity) {
    const int needed = v.degree() + offset + 1;
    if (static_cast<int>(u.coeff.size()) < needed) u.coeff.resize(needed, Polynomial::zero(arity));
    for (int e = 0; e <= v.degree(); ++e) u.coeff[e + offset] -= f * v.coeff[e];
    u.trim();
}

Polynomial exact_quotient(const Polynomial& p, const Polynomial& q, const char* where) {
    Division d = divide_exact(p, q);
    if (!d.exact) throw KernelError(std::string("internal division failed in ") + where);
    return std::move(d.quotient);
}

UniPoly uni_exact_divide(const UniPoly& u, const Polynomial& f, const char* where) {
    UniPoly out;
    out.coeff.reserve(u.coeff.size());
    for (const auto& c : u.coeff)
        out.coeff.push_back(c.is_zero() ? c : exact_quotient(c, f, where));
    out.trim();
    return out;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B in the main variable.
UniPoly pseudo_remainder(UniPoly a, const UniPoly& b, int arity) {
    const Polynomial& lb = b.lc();
    int steps = a.degree() - b.degree() + 1;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Polynomial la = a.lc();
        const int offset = a.degree() - b.degree();
        a = uni_scale(a, lb);
        uni_sub_shifted(a, la, b, offset, arity);
        --steps;
    }
    for (; steps > 0; --steps) a = uni_scale(a, lb);
    return a;
}

Monomial monomial_content(const Polynomial& p) {
    Monomial g = p.leading_term().first;
    for (const auto& [m, c] : p.terms()) {
        g = g.gcd(m);
        if (g.is_one()) break;
    }
    return g;
}

Polynomial strip_monomial(const Polynomial& p, const Monomial& m) {
    if (m.is_one()) return p;
    Polynomial out(p.arity());
    for (const auto& [mono, c] : p.terms()) out += Polynomial::term(p.arity(), *mono.divided_by(m), c);
    return out;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const UniPoly& u) {
    Polynomial cont;
    bool first = true;
    for (const auto& c : u.coeff) {
        if (c.is_zero()) continue;
        cont = first ? c : gcd_impl(cont, c);
        first = false;
        if (cont.is_constant()) break;
    }
    return monic(cont);
}

// gcd of the primitive parts via the subresultant remainder sequence.
Polynomial subresultant_gcd(UniPoly f, UniPoly g, int var, int arity) {
    if (f.degree() < g.degree()) std::swap(f, g);
    Polynomial scale_g = Polynomial::one(arity);
    Polynomial scale_h = Polynomial::one(arity);
    while (true) {
        const int delta = f.degree() - g.degree();
        UniPoly r = pseudo_remainder(f, g, arity);
        if (r.is_zero()) break;
        if (r.degree() == 0) return Polynomial::one(arity);  // coprime in var
        f = std::move(g);
        const Polynomial divisor = scale_g * pow(scale_h, delta);
        g = uni_exact_divide(r, divisor, "subresultant step");
        scale_g = f.lc();
        if (delta > 0)
            scale_h = exact_quotient(pow(scale_g, delta), pow(scale_h, delta - 1), "subresultant h");
    }
    // g holds the last nonzero remainder; return its primitive part.
    const Polynomial cont = content_in(g);
    UniPoly pp = uni_exact_divide(g, cont, "primitive part");
    return recompose(pp, var, arity);
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial::one(a.arity());
    if (a == b) return monic(a);

    const Monomial ma = monomial_content(a);
    const Monomial mb = monomial_content(b);
    const Monomial mg = ma.gcd(mb);
    Polynomial pa = strip_monomial(a, ma);
    Polynomial pb = strip_monomial(b, mb);

    Polynomial core;
    if (pa.is_constant() || pb.is_constant()) {
        core = Polynomial::one(a.arity());
    } else {
        int v = -1;  // largest variable present in either operand
        for (const auto& [m, c] : pa.terms()) v = std::max(v, m.max_variable());
        for (const auto& [m, c] : pb.terms()) v = std::max(v, m.max_variable());
        UniPoly ua = decompose(pa, v);
        UniPoly ub = decompose(pb, v);
        if (ua.degree() == 0) {
            core = gcd_impl(pa, content_in(ub));
        } else if (ub.degree() == 0) {
            core = gcd_impl(content_in(ua), pb);
        } else {
            const Polynomial ca = content_in(ua);
            const Polynomial cb = content_in(ub);
            const Polynomial cg = gcd_impl(ca, cb);
            UniPoly ppa = uni_exact_divide(ua, ca, "content removal");
            UniPoly ppb = uni_exact_divide(ub, cb, "content removal");
            core = subresultant_gcd(std::move(ppa), std::move(ppb), v, a.arity()) * cg;
        }
    }
    return monic(core * Polynomial::term(a.arity(), mg, 1));
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    require_same_arity(p, q);
    if (p.is_zero() && q.is_zero()) throw KernelError("gcd(0, 0) is undefined");
    return gcd_impl(p, q);
}

GradedDecomposition grade(const Polynomial& p, int d) {
    if (d < 2) throw KernelError("grading requires d >= 2");
    GradedDecomposition out;
    out.d = d;
    out.parts.assign(d, Polynomial::zero(p.arity()));
    for (const auto& [m, c] : p.terms())
        out.parts[m.total_degree() % d] += Polynomial::term(p.arity(), m, c);
    return out;
}

std::optional<Polynomial> dth_root(const Polynomial& p, int d) {
    if (d < 1) throw KernelError("root order must be positive");
    if (p.is_zero()) throw KernelError("d-th root of the zero polynomial");
    if (d == 1) return p;

    const auto& [lm, lc] = p.leading_term();
    for (const auto& [var, exp] : lm.entries())
        if (exp % d != 0) return std::nullopt;
    auto mu = rational_dth_root(lc, d);
    if (!mu) return std::nullopt;

    // Build the root term by term: the leading monomial of p - root^d
    // determines the next term after dividing by d * (leading root term)^(d-1).
    Monomial head = Monomial::one();
    {
        std::vector<Monomial::Entry> entries;
        for (const auto& [var, exp] : lm.entries()) entries.emplace_back(var, exp / d);
        head = Monomial::from_entries(std::move(entries));
    }
    Polynomial root = Polynomial::term(p.arity(), head, *mu);
    const Monomial head_power = head.pow(d - 1);
    Rational lead_scale = d;
    for (int i = 0; i < d - 1; ++i) lead_scale *= *mu;
    Monomial previous = head;
    while (true) {
        Polynomial diff = p - pow(root, d);
        if (diff.is_zero()) return root;
        const auto& [dm, dc] = diff.leading_term();
        auto tm = dm.divided_by(head_power);
        if (!tm) return std::nullopt;
        if (!grlex_less(*tm, previous)) return std::nullopt;  // no progress: not a d-th power
        root += Polynomial::term(p.arity(), *tm, dc / lead_scale);
        previous = *tm;
    }
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (static_cast<int>(images.size()) != p.arity())
        throw ArityMismatch("expected " + std::to_string(p.arity()) + " images, got " +
                            std::to_string(images.size()));
    const int out_arity = images.empty() ? 0 : images.front().arity();
    for (const auto& f : images)
        if (f.arity() != out_arity) throw ArityMismatch("images have mixed arities");
    Polynomial out(out_arity);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(out_arity, c);
        for (const auto& [var, exp] : m.entries()) t *= pow(images[var], exp);
        out += t;
    }
    return out;
}

std::string to_string(const Polynomial& p, const VarNamer& namer) {
    if (p.is_zero()) return "0";
    const VarNamer name = namer ? namer : VarNamer(default_var_name);
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational mag = abs(c);
        if (m.is_one()) {
            out << mag.get_str();
        } else {
            bool printed = false;
            if (mag != 1) {
                out << mag.get_str();
                printed = true;
            }
            for (const auto& [var, exp] : m.entries()) {
                if (printed) out << "*";
                out << name(var);
                if (exp > 1) out << "^" << exp;
                printed = true;
            }
        }
    }
    return out.str();
}

}  // namespace veronese
