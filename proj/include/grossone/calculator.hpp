#pragma once

#include <cstddef>
#include <string_view>

#include "grossone/gross_number.hpp"

namespace grossone {

inline constexpr std::size_t kDefaultMaxQuotientTerms = 64;

/// Evaluates an infix expression over grossone literals.
///
///   expr    := product (('+'|'-') product)*
///   product := unary (('*'|'/') unary)*
///   unary   := ('+'|'-') unary | primary
///   primary := literal | '(' expr ')'
///
/// A literal is one unsigned term of the number grammar in notation.hpp, so
/// "1/2G^-1" is the single literal (1/2)*G^-1 while "1/G" divides 1 by G.
/// Every string accepted by parse() evaluates to the same value here.
///
/// Throws ParseError, DivisionByZero or NonTerminatingQuotient.
GrossNumber evaluate(std::string_view expression,
                     std::size_t max_quotient_terms = kDefaultMaxQuotientTerms);

}  // namespace grossone
