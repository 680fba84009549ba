#pragma once
#include <string>

#include "lsa/ratfunc.hpp"

namespace lsa {

// Parses integers, a/b, i, parameter names, + - * / ^ and parentheses.
// Throws SyntaxError (column relative to `col0`) or DivisionByZero.
RatFunc parse_scalar(const std::string& text, int line = 0, int col0 = 1);

// Formats a scalar so that it can be placed before a basis vector.
std::string coefficient_str(const RatFunc& c);

}  // namespace lsa
