#include "grossone/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace grossone {

namespace {

bool all_digits(std::string_view text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer parse_natural(std::string_view text) {
  if (!all_digits(text)) {
    throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    Integer den = parse_natural(body.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    result = make_rational(parse_natural(body.substr(0, slash)), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = make_rational(parse_natural(whole) * scale + parse_natural(frac), scale);
  } else {
    result = Rational(parse_natural(body));
  }
  return negative ? Rational(-result) : result;
}

std::string to_fixed(const Rational& value, int decimals) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
  Rational shifted = value * scale + Rational(1, 2);
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());

  bool negative = rounded < 0;
  Integer magnitude = abs(rounded);
  std::string digits = magnitude.get_str();
  if (decimals == 0) {
    return (negative ? "-" : "") + digits;
  }
  if (digits.size() <= static_cast<std::size_t>(decimals)) {
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(decimals), 1, '.');
  return (negative ? "-" : "") + digits;
}

int sign(const Rational& value) {
  int s = sgn(value);
  return (s > 0) - (s < 0);
}

}  // namespace grossone
