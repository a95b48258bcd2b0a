#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "veronese/poisson.hpp"
#include "veronese/polynomial.hpp"

namespace veronese {

// Expression grammar (whitespace-insensitive):
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ('^' nat)?
//   primary := nat ('/' nat)? | var | '(' expr ')'
//            | '[' bracket ',' bracket ']'      (Poisson only: basis literal)
//            | '{' expr ',' expr '}'            (Poisson only: bracket)
//   var     := 'x' nat                          (1-based, within arity)
// Bracket literals must be the standard bracketing of a Lyndon word within
// the table bound; anything else is rejected.

/// Parses in the polynomial context with variables x1..xn.
Polynomial parse_polynomial(std::string_view text, int n);

/// Parses in the Poisson context over the given basis table.
PoissonElement parse_poisson(std::string_view text, std::shared_ptr<const LyndonBasis> table);

std::string to_text(const Polynomial& p);
std::string to_text(const PoissonElement& f);

}  // namespace veronese
