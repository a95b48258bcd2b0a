#include "veronese/rational.hpp"

#include "veronese/errors.hpp"

namespace veronese {

std::optional<Rational> rational_dth_root(const Rational& value, int d) {
    if (d < 1) throw KernelError("root order must be positive");
    if (d == 1) return value;
    if (value == 0) return Rational(0);
    const bool negative = value < 0;
    if (negative && d % 2 == 0) return std::nullopt;

    Integer num = abs(value.get_num());
    Integer den = value.get_den();
    Integer root_num, root_den;
    const bool exact_num = mpz_root(root_num.get_mpz_t(), num.get_mpz_t(), d) != 0;
    const bool exact_den = mpz_root(root_den.get_mpz_t(), den.get_mpz_t(), d) != 0;
    if (!exact_num || !exact_den) return std::nullopt;

    Rational r(root_num, root_den);
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

}  // namespace veronese
