#pragma once

#include <string>

#include "kss/cyclotomic.hpp"

namespace kss {

// Parses a scalar literal into Q(zeta_N) for the given conductor N.
//
// Grammar (whitespace insensitive):
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | primary ('^' integer)?
//   primary := integer | 'i' | 'z' | '(' expr ')'
//
// 'z' denotes zeta_N (a primitive N-th root of unity) and 'i' the imaginary
// unit (requires 4 | N).  Exponents are integers and may be negative.
// Examples: "1/2", "-3", "z^4", "1+i", "(1-z)^2/2".
//
// Throws ParseError on malformed input, ConductorTooSmall for 'i' when
// 4 does not divide N, DivisionByZero for division by a zero subexpression.
CycScalar parse_scalar(const std::string& text, unsigned conductor);

// CycScalar::str() already yields the canonical literal; this free function
// exists for symmetry with parse_scalar.
std::string format_scalar(const CycScalar& s);

}  // namespace kss
