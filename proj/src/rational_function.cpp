#include "veronese/rational_function.hpp"

#include "veronese/errors.hpp"

namespace veronese {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.arity() != den_.arity()) throw ArityMismatch("fraction parts have different arities");
    if (num_.is_zero()) {
        den_ = Polynomial::one(den_.arity());
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant() || g.constant_value() != 1) {
        Division dn = divide_exact(num_, g);
        Division dd = divide_exact(den_, g);
        if (!dn.exact || !dd.exact) throw KernelError("fraction reduction failed");
        num_ = std::move(dn.quotient);
        den_ = std::move(dd.quotient);
    }
    const Rational lead = den_.leading_term().second;
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

bool RationalFunction::is_polynomial() const {
    return den_.is_constant() && den_.constant_value() == 1;
}

RationalFunction reduce_fraction(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}

}  // namespace veronese
