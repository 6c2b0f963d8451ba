#pragma once

#include <string_view>

#include "losq/operator_expr.hpp"

namespace losq {

/// Parses operator text such as "cis(theta)*ad*b + cis(-theta)*a*bd".
///
/// Grammar (whitespace insignificant, '−' accepted for '-'):
///
///   expr    := [sign] term (sign term)*
///   term    := unary (['*'] unary)*          juxtaposition multiplies
///   unary   := sign unary | factor
///   factor  := number | 'i' | 'theta' | 'a' | 'ad' | 'b' | 'bd'
///            | 'cis' '(' expr ')'            e^{ix}, x a real scalar
///            | '(' expr ')' | '(' expr ',' expr ')'   the latter is re + i·im
///
/// `theta` is bound to the given value. Throws ParseError with the byte offset
/// of the offending token.
OperatorExpr parse(std::string_view text, double theta = 0.0);

}  // namespace losq
