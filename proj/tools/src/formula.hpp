#pragma once

#include <string_view>

#include "umeb/cyclo.hpp"

namespace umeb::cli {

/// Evaluates a printed closed-form entry such as "(-sqrt3+i)/2" or "1/sqrt2" exactly.
/// Grammar: integers, i, sqrt2, sqrt3, sqrt6, + - * /, unary minus, parentheses.
/// Throws ParseError on anything else.
Cyclo eval_formula(std::string_view text);

}  // namespace umeb::cli
