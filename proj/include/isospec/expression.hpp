#pragma once

#include <string_view>

namespace isospec {

/// Evaluates a real constant written with + - * /, parentheses, unary
/// minus and sqrt(...), e.g. "1+0.5*sqrt((9+sqrt(21))/5)". Throws
/// Error(Parse) naming the offending position.
double evaluate_expression(std::string_view text);

}  // namespace isospec
