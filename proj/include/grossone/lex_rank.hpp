#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grossone/gross_number.hpp"

namespace grossone::lex {

class EmptyWord : public std::invalid_argument {
 public:
  EmptyWord() : std::invalid_argument("word must have at least one position") {}
};

class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch(std::size_t a, std::size_t b);
};

class NegativeCount : public std::invalid_argument {
 public:
  explicit NegativeCount(std::size_t index);
};

/// Fixed-length sequence of non-negative counts, e.g. (gold, silver, bronze).
/// Counts are unbounded; there is no cap on how large a position may grow.
class Word {
 public:
  explicit Word(std::vector<Integer> counts);
  Word(std::initializer_list<long> counts);

  std::span<const Integer> counts() const { return counts_; }
  std::size_t length() const { return counts_.size(); }
  const Integer& operator[](std::size_t i) const { return counts_[i]; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Integer> counts_;
};

/// counts[i] * G^(w-1-i), summed. Comparing encodings with grossone
/// arithmetic reproduces lexicographic order for any count magnitudes.
GrossNumber encode(const Word& word);

/// Direct first-difference comparison on the integer sequences.
std::strong_ordering lex_compare(const Word& a, const Word& b);

/// Ordinary positional value sum counts[i] * base^(w-1-i). Requires base >= 2.
Integer encode_finite_base(const Word& word, const Integer& base);

/// A pair (u, v) with u lexicographically greater than v but a smaller
/// positional value in `base`: u = (2, 0, ..., 0), v = (1, base + 1, 0, ..., 0).
/// Requires base >= 2 and length >= 2 (std::invalid_argument otherwise).
std::pair<Word, Word> finite_base_counterexample(const Integer& base, std::size_t length);

}  // namespace grossone::lex
