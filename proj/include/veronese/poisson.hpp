#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "veronese/lyndon.hpp"
#include "veronese/polynomial.hpp"

namespace veronese {

/// Element of the free Poisson algebra P<x_1..x_n>: a polynomial whose
/// indeterminates are the Lyndon basis elements e_1, e_2, ... of a shared
/// table. The weighted degree of a monomial e_{i_1}...e_{i_s} is the sum of
/// the basis degrees, as opposed to its polynomial length s.
class PoissonElement {
public:
    PoissonElement() = default;
    PoissonElement(std::shared_ptr<const LyndonBasis> table, Polynomial poly);

    static PoissonElement zero(std::shared_ptr<const LyndonBasis> table);
    static PoissonElement constant(std::shared_ptr<const LyndonBasis> table, Rational value);
    static PoissonElement one(std::shared_ptr<const LyndonBasis> table) { return constant(std::move(table), 1); }
    static PoissonElement variable(std::shared_ptr<const LyndonBasis> table, int index);
    static PoissonElement term(std::shared_ptr<const LyndonBasis> table, Monomial m, Rational c);
    static PoissonElement from_lie(std::shared_ptr<const LyndonBasis> table, const LieCombination& c);

    const std::shared_ptr<const LyndonBasis>& table() const { return table_; }
    const Polynomial& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    bool is_constant() const { return poly_.is_constant(); }
    Rational constant_value() const { return poly_.constant_value(); }

    /// Weighted degree of the element; throws on zero input.
    int weighted_degree() const;
    /// Every monomial has weighted degree congruent to `residue` mod d.
    /// Vacuously true for zero.
    bool is_d_homogeneous(int d, int residue) const;
    /// All monomials share one weighted degree (zero counts as homogeneous).
    bool is_homogeneous() const;

    PoissonElement& operator+=(const PoissonElement& other);
    PoissonElement& operator-=(const PoissonElement& other);
    PoissonElement& operator*=(const PoissonElement& other);
    PoissonElement& operator*=(const Rational& s);
    friend PoissonElement operator+(PoissonElement a, const PoissonElement& b) { return a += b; }
    friend PoissonElement operator-(PoissonElement a, const PoissonElement& b) { return a -= b; }
    friend PoissonElement operator*(PoissonElement a, const PoissonElement& b) { return a *= b; }
    friend PoissonElement operator*(PoissonElement a, const Rational& s) { return a *= s; }
    friend PoissonElement operator*(const Rational& s, PoissonElement a) { return a *= s; }
    friend PoissonElement operator-(const PoissonElement& a);
    friend bool operator==(const PoissonElement& a, const PoissonElement& b);

private:
    void require_same_table(const PoissonElement& other) const;

    std::shared_ptr<const LyndonBasis> table_;
    Polynomial poly_;
};

int weighted_degree(const Monomial& m, const LyndonBasis& table);

/// Poisson bracket by double Leibniz expansion:
/// {f,g} = sum_{i,j} (df/de_i)(dg/de_j) {e_i,e_j}, with {e_i,e_j} looked up
/// in the Lie table. Throws DegreeOverflow past the table bound.
PoissonElement poisson_bracket(const PoissonElement& f, const PoissonElement& g);

/// Split by weighted degree mod d; parts sum back to the input.
std::vector<PoissonElement> grade_poisson(const PoissonElement& f, int d);

PoissonElement pow(const PoissonElement& f, int k);
PoissonElement derivative(const PoissonElement& f, int var);
Division divide_exact(const PoissonElement& p, const PoissonElement& q);
PoissonElement gcd(const PoissonElement& p, const PoissonElement& q);
std::string to_string(const PoissonElement& f);

/// Reduced fraction of Poisson elements (lowest terms, monic denominator).
/// The e_i are algebraically independent, so reduction is plain polynomial
/// gcd over the basis indeterminates.
class PoissonFraction {
public:
    PoissonFraction(PoissonElement num, PoissonElement den);
    static PoissonFraction of(PoissonElement num) {
        auto one = PoissonElement::one(num.table());
        return PoissonFraction(std::move(num), std::move(one));
    }

    const PoissonElement& num() const { return num_; }
    const PoissonElement& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    PoissonFraction& operator+=(const PoissonFraction& other);
    PoissonFraction& operator-=(const PoissonFraction& other);
    PoissonFraction& operator*=(const PoissonFraction& other);
    friend PoissonFraction operator+(PoissonFraction a, const PoissonFraction& b) { return a += b; }
    friend PoissonFraction operator-(PoissonFraction a, const PoissonFraction& b) { return a -= b; }
    friend PoissonFraction operator*(PoissonFraction a, const PoissonFraction& b) { return a *= b; }
    friend bool operator==(const PoissonFraction&, const PoissonFraction&) = default;

private:
    PoissonElement num_;
    PoissonElement den_;
};

/// Bracket on the fraction field:
/// {a/b, c/d} = ({a,c}bd - {a,d}bc - {b,c}ad + {b,d}ac) / (b^2 d^2),
/// reduced to lowest terms.
PoissonFraction fraction_bracket(const PoissonFraction& x, const PoissonFraction& y);

std::string to_string(const PoissonFraction& f);

/// Images of ambient variables e_i, either a derivation or a morphism
/// depending on how it is applied. `scope` lists the covered variable
/// indices in ascending order; `images` is parallel to it.
struct AmbientMap {
    std::shared_ptr<const LyndonBasis> table;
    std::vector<int> scope;
    std::vector<PoissonElement> images;

    static AmbientMap full(std::shared_ptr<const LyndonBasis> table, std::vector<PoissonElement> images);

    bool covers(int var) const;
    bool covers_support(const PoissonElement& f) const;
    const PoissonElement& image(int var) const;
};

/// Leibniz application: D(f) = sum_i (df/de_i) D(e_i).
PoissonElement apply_derivation(const AmbientMap& map, const PoissonElement& f);

/// Quotient-rule extension of a derivation to the fraction field:
/// S(a/b) = (S(a) b - a S(b)) / b^2.
PoissonFraction apply_derivation(const AmbientMap& map, const PoissonFraction& f);

/// Substitution e_i -> image(e_i).
PoissonElement apply_morphism(const AmbientMap& map, const PoissonElement& f);

}  // namespace veronese
