#include "grossone/lex_rank.hpp"

#include <string>

namespace grossone::lex {

LengthMismatch::LengthMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("word lengths differ: " + std::to_string(a) + " vs " +
                            std::to_string(b)) {}

NegativeCount::NegativeCount(std::size_t index)
    : std::invalid_argument("negative count at position " + std::to_string(index)) {}

Word::Word(std::vector<Integer> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) {
    throw EmptyWord();
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < 0) {
      throw NegativeCount(i);
    }
  }
}

Word::Word(std::initializer_list<long> counts)
    : Word(std::vector<Integer>(counts.begin(), counts.end())) {}

GrossNumber encode(const Word& word) {
  std::vector<std::pair<Rational, Rational>> pairs;
  pairs.reserve(word.length());
  const long top = static_cast<long>(word.length()) - 1;
  for (std::size_t i = 0; i < word.length(); ++i) {
    pairs.emplace_back(Rational(word[i]), Rational(top - static_cast<long>(i)));
  }
  return GrossNumber::canonicalize(std::move(pairs));
}

std::strong_ordering lex_compare(const Word& a, const Word& b) {
  if (a.length() != b.length()) {
    throw LengthMismatch(a.length(), b.length());
  }
  for (std::size_t i = 0; i < a.length(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) {
      return c > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

Integer encode_finite_base(const Word& word, const Integer& base) {
  if (base < 2) {
    throw std::invalid_argument("base must be at least 2");
  }
  // Horner evaluation.
  Integer value = 0;
  for (const Integer& c : word.counts()) {
    value = value * base + c;
  }
  return value;
}

std::pair<Word, Word> finite_base_counterexample(const Integer& base, std::size_t length) {
  if (base < 2) {
    throw std::invalid_argument("base must be at least 2");
  }
  if (length < 2) {
    throw std::invalid_argument("counterexample needs at least two positions");
  }
  std::vector<Integer> u(length, 0);
  std::vector<Integer> v(length, 0);
  u[0] = 2;
  v[0] = 1;
  v[1] = base + 1;
  return {Word(std::move(u)), Word(std::move(v))};
}

}  // namespace grossone::lex
