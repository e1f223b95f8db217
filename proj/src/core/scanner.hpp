#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "grossone/gross_number.hpp"
#include "grossone/notation.hpp"

namespace grossone::detail {

// Cursor over grossone text shared by the number parser and the calculator.
// Whitespace is skipped before every token.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t position() const { return pos_; }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) {
      return false;
    }
    ++pos_;
    return true;
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  [[noreturn]] void fail(const std::string& expected) { throw ParseError(pos_, expected); }

  // rational := integer ['/' positive-integer]
  // The slash is consumed only when a digit follows it, which leaves "1/G"
  // for the caller to treat as division.
  Rational rational() {
    Integer num = integer();
    std::size_t save = pos_;
    if (accept('/')) {
      if (!peek_digit()) {
        pos_ = save;
        return Rational(num);
      }
      std::size_t den_pos = pos_;
      Integer den = integer();
      if (den == 0) {
        pos_ = den_pos;
        fail("positive denominator");
      }
      return make_rational(num, den);
    }
    return Rational(num);
  }

  Rational signed_rational() {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Rational r = rational();
    return negative ? Rational(-r) : r;
  }

  // Unsigned term: rational ['G' power] | 'G' power.
  GrossNumber unsigned_term() {
    Rational digit = 1;
    if (peek_digit()) {
      digit = rational();
      if (peek() != 'G') {
        return GrossNumber(digit);
      }
    } else if (peek() != 'G') {
      fail("number or 'G'");
    }
    accept('G');
    Rational power = 1;
    if (accept('^')) {
      if (!peek_digit() && peek() != '-' && peek() != '+') {
        fail("grosspower");
      }
      power = signed_rational();
    }
    return GrossNumber::monomial(digit, power);
  }

 private:
  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("digit");
    }
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace grossone::detail
