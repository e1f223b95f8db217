#include "grossone/notation.hpp"

#include <string>

#include "scanner.hpp"

namespace grossone {

ParseError::ParseError(std::size_t position, const std::string& expected)
    : std::invalid_argument("parse error at position " + std::to_string(position) +
                            ": expected " + expected),
      position_(position) {}

GrossNumber parse(std::string_view text) {
  detail::Scanner in(text);
  if (in.at_end()) {
    in.fail("term");
  }
  GrossNumber result;
  bool first = true;
  while (!in.at_end()) {
    bool negative = false;
    if (!first) {
      if (in.accept('-')) {
        negative = true;
      } else if (!in.accept('+')) {
        in.fail("'+', '-' or end of input");
      }
    }
    // Optional sign on the term itself.
    if (in.accept('-')) {
      negative = !negative;
    } else {
      in.accept('+');
    }
    GrossNumber term = in.unsigned_term();
    result += negative ? -term : term;
    first = false;
  }
  return result;
}

namespace {

std::string ascii_term(const Term& t, bool first) {
  std::string out;
  if (sign(t.digit) < 0) {
    out += '-';
  } else if (!first) {
    out += '+';
  }
  Rational magnitude = abs(t.digit);
  if (t.power == 0) {
    return out + to_string(magnitude);
  }
  if (magnitude != 1) {
    out += to_string(magnitude);
  }
  out += 'G';
  if (t.power != 1) {
    out += '^' + to_string(t.power);
  }
  return out;
}

}  // namespace

std::string format(const GrossNumber& value, Style style) {
  if (value.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const Term& t : value.terms()) {
    if (style == Style::Ascii) {
      out += ascii_term(t, first);
    } else {
      if (!first) {
        out += ' ';
      }
      out += to_string(t.digit) + "①^" + to_string(t.power);
    }
    first = false;
  }
  return out;
}

}  // namespace grossone
