#pragma once

#include "veronese/polynomial.hpp"

namespace veronese {

/// Reduced fraction of polynomials: gcd(num, den) = 1 and den is monic,
/// so equal fractions have identical representations.
class RationalFunction {
public:
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Reduces num/den to lowest terms with a monic denominator.
RationalFunction reduce_fraction(const Polynomial& num, const Polynomial& den);

}  // namespace veronese
