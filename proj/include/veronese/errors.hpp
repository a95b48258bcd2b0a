#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace veronese {

/// Base class of every error thrown by the kernel.
struct KernelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two operands built over different variable sets or basis tables.
struct ArityMismatch : KernelError {
    using KernelError::KernelError;
};

/// Division by the zero polynomial or a zero denominator.
struct DivisionByZero : KernelError {
    using KernelError::KernelError;
};

/// A bracket needed a basis element beyond the table's degree bound.
/// The caller must rebuild the table with a larger bound.
struct DegreeOverflow : KernelError {
    DegreeOverflow(int required_degree, int bound)
        : KernelError("bracket needs basis elements of degree " + std::to_string(required_degree) +
                      " but the table is bounded at " + std::to_string(bound)),
          required(required_degree),
          bound(bound) {}
    int required;
    int bound;
};

/// Input map is not graded: some image leaves its degree class mod d.
struct NotDGraded : KernelError {
    using KernelError::KernelError;
};

/// Automorphism lifting over one variable is rejected: the degree-d Veronese
/// subalgebra of K[x] is K[x^d], and e.g. x^d -> x^d + 1 is an automorphism
/// of it that no automorphism of K[x] induces.
struct OneVariableContext : KernelError {
    using KernelError::KernelError;
};

/// Syntax error in an expression or map file; positions are 1-based.
struct ParseError : KernelError {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : KernelError(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

/// Structurally valid input that violates a semantic precondition
/// (missing generator image, image outside the Veronese subalgebra, ...).
struct InvalidInput : KernelError {
    using KernelError::KernelError;
};

}  // namespace veronese
