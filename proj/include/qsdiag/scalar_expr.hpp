#pragma once

#include <string_view>

#include "qsdiag/matrix.hpp"

namespace qsd {

/// Evaluates a small arithmetic expression over complex numbers.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('-' | '+') unary | power
///   power  := atom ('^' unary)?
///   atom   := number ['i'] | 'pi' | 'i' | 'sqrt' '(' expr ')' | '(' expr ')'
///
/// So "pi/4", "2*pi/3", "1/sqrt(2)", "0.5-0.5i" and "-1e-3" all parse.
/// Throws ParseError with a 1-based column.
cplx parse_scalar(std::string_view text);

/// parse_scalar restricted to real results (|imag| <= 1e-15).
double parse_real(std::string_view text);

}  // namespace qsd
