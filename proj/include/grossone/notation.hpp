#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "grossone/gross_number.hpp"

namespace grossone {

// Text forms of a GrossNumber.
//
// ascii:  "-3/2G^2+G-7+2G^-1". Digits of +-1 are elided before G, the power
//         1 is written as a bare "G" and the power 0 drops the G entirely.
// paper:  space-separated positional record with every digit and power
//         spelled out, e.g. "13①^2 11①^1 9①^0".
enum class Style { Ascii, Paper };

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& expected);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace-insensitive):
//   number   := term (('+'|'-') term)* | '0'
//   term     := [sign] rational ['G' ['^' [sign] rational]]
//             | [sign] 'G' ['^' [sign] rational]
//   rational := integer ['/' positive-integer]
GrossNumber parse(std::string_view text);

std::string format(const GrossNumber& value, Style style = Style::Ascii);

}  // namespace grossone
