#pragma once

#include <string>
#include <string_view>

#include "jforge/ratfunc.hpp"

namespace jforge {

// Canonical text grammar for scalars:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | identifier | '(' expr ')'
//
// Identifiers are [A-Za-z_][A-Za-z0-9_]* and are interned as parameters.
// Whitespace is ignored.

RatFunc parse_ratfunc(std::string_view text);

/// Terms in decreasing deglex order, e.g. "r^2-1" or "3/2*m*n-k".
std::string to_string(const Poly& p);

/// "num", "num/den" or "(num)/(den)"; parentheses only where needed.
std::string to_string(const RatFunc& f);

}  // namespace jforge
