#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grossone/rational.hpp"

namespace grossone {

/// One grossdigit/grosspower pair: `digit * G^power`, where G is grossone,
/// the infinite unit. Only finite rational powers are representable.
struct Term {
  Rational digit;
  Rational power;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class NumberClass { Zero, Infinitesimal, Finite, Infinite };

const char* to_string(NumberClass cls);

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Thrown when long division has produced `max_terms` quotient terms and the
/// remainder is still nonzero, i.e. the exact quotient has no finite record.
class NonTerminatingQuotient : public std::domain_error {
 public:
  explicit NonTerminatingQuotient(std::size_t max_terms);
  std::size_t max_terms() const { return max_terms_; }

 private:
  std::size_t max_terms_;
};

/// A finite sum of terms c_i * G^p_i kept in canonical form: powers strictly
/// decreasing, no zero digits, no repeated powers. Zero has no terms.
///
/// Values are immutable once built; every operation returns a new number.
class GrossNumber {
 public:
  GrossNumber() = default;
  GrossNumber(const Rational& finite);  // NOLINT: finite numbers convert implicitly
  GrossNumber(long finite) : GrossNumber(Rational(finite)) {}  // NOLINT

  /// The unit G itself (single term 1*G^1).
  static GrossNumber grossone();
  static GrossNumber monomial(const Rational& digit, const Rational& power);

  /// Builds the canonical form of an arbitrary multiset of (digit, power)
  /// pairs: like powers are summed, zero sums dropped, powers sorted.
  static GrossNumber canonicalize(std::vector<std::pair<Rational, Rational>> pairs);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Highest-power term. Precondition: !is_zero().
  const Term& leading() const { return terms_.front(); }

  /// Digit at `power`, or 0 if that power is absent.
  Rational digit_at(const Rational& power) const;

  GrossNumber operator-() const;
  friend GrossNumber operator+(const GrossNumber& a, const GrossNumber& b);
  friend GrossNumber operator-(const GrossNumber& a, const GrossNumber& b);
  friend GrossNumber operator*(const GrossNumber& a, const GrossNumber& b);

  GrossNumber& operator+=(const GrossNumber& other) { return *this = *this + other; }
  GrossNumber& operator-=(const GrossNumber& other) { return *this = *this - other; }
  GrossNumber& operator*=(const GrossNumber& other) { return *this = *this * other; }

  friend bool operator==(const GrossNumber&, const GrossNumber&) = default;
  friend std::strong_ordering operator<=>(const GrossNumber& a, const GrossNumber& b);

 private:
  explicit GrossNumber(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

  std::vector<Term> terms_;
};

GrossNumber add(const GrossNumber& a, const GrossNumber& b);
GrossNumber negate(const GrossNumber& a);
GrossNumber subtract(const GrossNumber& a, const GrossNumber& b);
GrossNumber multiply(const GrossNumber& a, const GrossNumber& b);

/// Long division by leading term. Returns q with q * b == a exactly, or
/// throws NonTerminatingQuotient once `max_terms` quotient terms have been
/// emitted with a nonzero remainder. Throws DivisionByZero if b is zero.
GrossNumber divide(const GrossNumber& a, const GrossNumber& b, std::size_t max_terms);

/// Sign of the leading grossdigit of a - b. G dominates every finite digit,
/// so the highest surviving power decides.
std::strong_ordering compare(const GrossNumber& a, const GrossNumber& b);

NumberClass classify(const GrossNumber& a);

}  // namespace grossone
