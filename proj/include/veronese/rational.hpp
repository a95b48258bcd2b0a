#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace veronese {

/// Exact rational scalar. Always kept canonical: reduced, denominator >= 1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Exact d-th root of a rational, if one exists in Q.
/// For even d the root is the positive one; for odd d the sign follows the input.
std::optional<Rational> rational_dth_root(const Rational& value, int d);

/// Canonical text form, "num" or "num/den".
std::string to_string(const Rational& q);

int sign(const Rational& q);

}  // namespace veronese
