#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "veronese/monomial.hpp"
#include "veronese/rational.hpp"

namespace veronese {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in graded-lexicographic order (leading term first) and
/// never store a zero coefficient. Values are immutable in spirit: no
/// operation mutates its operands.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Polynomial() : arity_(0) {}
    explicit Polynomial(int arity);

    static Polynomial zero(int arity) { return Polynomial(arity); }
    static Polynomial constant(int arity, Rational value);
    static Polynomial one(int arity) { return constant(arity, 1); }
    static Polynomial variable(int arity, int var);
    static Polynomial term(int arity, Monomial m, Rational c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero polynomial included).
    Rational constant_value() const;
    int total_degree() const;  // kZeroDegree when zero
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Leading term under graded-lex; requires a nonzero polynomial.
    const std::pair<const Monomial, Rational>& leading_term() const;
    const Rational& coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Monomial& m, const Rational& c);
    friend Polynomial multiply(const Polynomial&, const Polynomial&);

    int arity_;
    TermMap terms_;
};

/// Exact-division outcome. When `exact` is false, `remainder` is the
/// nonzero witness whose leading monomial the divisor cannot reach.
struct Division {
    bool exact = false;
    Polynomial quotient;
    Polynomial remainder;
};

/// Long division by leading terms; exact iff divisor | dividend.
Division divide_exact(const Polynomial& p, const Polynomial& q);

/// Greatest common divisor, normalized monic. Content/primitive-part
/// reduction in the largest variable with a subresultant remainder
/// sequence, recursing on the coefficients.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Scales a nonzero polynomial so its leading coefficient is 1.
Polynomial monic(const Polynomial& p);

Polynomial pow(const Polynomial& p, int k);
Polynomial derivative(const Polynomial& p, int var);

/// Decomposition by total degree mod d: part i holds exactly the
/// monomials of degree congruent to i, and the parts sum to the input.
struct GradedDecomposition {
    int d = 0;
    std::vector<Polynomial> parts;
};

GradedDecomposition grade(const Polynomial& p, int d);

/// Exact d-th root over Q, or nullopt when none exists (non-divisible
/// exponents, or a leading coefficient with no rational d-th root).
/// For even d the root with positive leading coefficient is returned.
std::optional<Polynomial> dth_root(const Polynomial& p, int d);

/// Ring homomorphism x_i -> images[i].
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

using VarNamer = std::function<std::string(int)>;

/// Canonical text form: terms in graded-lex order, explicit '*' and '^'.
std::string to_string(const Polynomial& p, const VarNamer& namer = nullptr);

}  // namespace veronese
