#include "grossone/gross_number.hpp"

#include <algorithm>
#include <string>

namespace grossone {

const char* to_string(NumberClass cls) {
  switch (cls) {
    case NumberClass::Zero: return "Zero";
    case NumberClass::Infinitesimal: return "Infinitesimal";
    case NumberClass::Finite: return "Finite";
    case NumberClass::Infinite: return "Infinite";
  }
  return "?";
}

NonTerminatingQuotient::NonTerminatingQuotient(std::size_t max_terms)
    : std::domain_error("quotient does not terminate within " + std::to_string(max_terms) +
                        " terms"),
      max_terms_(max_terms) {}

GrossNumber::GrossNumber(const Rational& finite) {
  if (finite != 0) {
    terms_.push_back({finite, 0});
  }
}

GrossNumber GrossNumber::grossone() { return monomial(1, 1); }

GrossNumber GrossNumber::monomial(const Rational& digit, const Rational& power) {
  if (digit == 0) {
    return {};
  }
  return GrossNumber(std::vector<Term>{{digit, power}});
}

GrossNumber GrossNumber::canonicalize(std::vector<std::pair<Rational, Rational>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& x, const auto& y) { return x.second > y.second; });
  std::vector<Term> out;
  out.reserve(pairs.size());
  for (auto& [digit, power] : pairs) {
    if (!out.empty() && out.back().power == power) {
      out.back().digit += digit;
    } else {
      if (!out.empty() && out.back().digit == 0) {
        out.pop_back();
      }
      out.push_back({std::move(digit), std::move(power)});
    }
  }
  if (!out.empty() && out.back().digit == 0) {
    out.pop_back();
  }
  return GrossNumber(std::move(out));
}

Rational GrossNumber::digit_at(const Rational& power) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), power,
                             [](const Term& t, const Rational& p) { return t.power > p; });
  if (it != terms_.end() && it->power == power) {
    return it->digit;
  }
  return 0;
}

GrossNumber GrossNumber::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.digit = -t.digit;
  }
  return GrossNumber(std::move(out));
}

GrossNumber operator+(const GrossNumber& a, const GrossNumber& b) {
  // Both operands are sorted by decreasing power, so a single merge suffices.
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (i->power > j->power) {
      out.push_back(*i++);
    } else if (j->power > i->power) {
      out.push_back(*j++);
    } else {
      Rational sum = i->digit + j->digit;
      if (sum != 0) {
        out.push_back({std::move(sum), i->power});
      }
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms_.end());
  out.insert(out.end(), j, b.terms_.end());
  return GrossNumber(std::move(out));
}

GrossNumber operator-(const GrossNumber& a, const GrossNumber& b) { return a + (-b); }

GrossNumber operator*(const GrossNumber& a, const GrossNumber& b) {
  std::vector<std::pair<Rational, Rational>> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      products.emplace_back(x.digit * y.digit, x.power + y.power);
    }
  }
  return GrossNumber::canonicalize(std::move(products));
}

std::strong_ordering operator<=>(const GrossNumber& a, const GrossNumber& b) {
  return compare(a, b);
}

GrossNumber add(const GrossNumber& a, const GrossNumber& b) { return a + b; }
GrossNumber negate(const GrossNumber& a) { return -a; }
GrossNumber subtract(const GrossNumber& a, const GrossNumber& b) { return a - b; }
GrossNumber multiply(const GrossNumber& a, const GrossNumber& b) { return a * b; }

GrossNumber divide(const GrossNumber& a, const GrossNumber& b, std::size_t max_terms) {
  if (b.is_zero()) {
    throw DivisionByZero();
  }
  const Term& divisor = b.leading();
  GrossNumber quotient;
  GrossNumber remainder = a;
  for (std::size_t n = 0; n < max_terms && !remainder.is_zero(); ++n) {
    const Term& lead = remainder.leading();
    GrossNumber step = GrossNumber::monomial(lead.digit / divisor.digit, lead.power - divisor.power);
    quotient += step;
    remainder -= step * b;
  }
  if (!remainder.is_zero()) {
    throw NonTerminatingQuotient(max_terms);
  }
  return quotient;
}

std::strong_ordering compare(const GrossNumber& a, const GrossNumber& b) {
  GrossNumber diff = a - b;
  if (diff.is_zero()) {
    return std::strong_ordering::equal;
  }
  return sign(diff.leading().digit) > 0 ? std::strong_ordering::greater
                                        : std::strong_ordering::less;
}

NumberClass classify(const GrossNumber& a) {
  if (a.is_zero()) {
    return NumberClass::Zero;
  }
  int s = sign(a.leading().power);
  if (s > 0) {
    return NumberClass::Infinite;
  }
  return s == 0 ? NumberClass::Finite : NumberClass::Infinitesimal;
}

}  // namespace grossone
