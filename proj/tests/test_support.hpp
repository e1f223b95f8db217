#pragma once

// Shared generators and a reference model for property tests.
//
// The reference model stores a number as a power -> digit map and implements
// addition and multiplication by brute-force expansion. It shares nothing with
// the merge/canonicalize code paths it is used to check.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "grossone/gross_number.hpp"
#include "grossone/lex_rank.hpp"

namespace grossone::testing {

using Model = std::map<Rational, Rational>;  // power -> digit, zeros removed

inline Model prune(Model m) {
  for (auto it = m.begin(); it != m.end();) {
    it = it->second == 0 ? m.erase(it) : std::next(it);
  }
  return m;
}

inline Model model_of_pairs(const std::vector<std::pair<Rational, Rational>>& pairs) {
  Model m;
  for (const auto& [digit, power] : pairs) {
    m[power] += digit;
  }
  return prune(std::move(m));
}

inline Model model_of(const GrossNumber& x) {
  Model m;
  for (const Term& t : x.terms()) {
    m[t.power] += t.digit;
  }
  return m;
}

inline Model model_add(const Model& a, const Model& b) {
  Model m = a;
  for (const auto& [p, d] : b) m[p] += d;
  return prune(std::move(m));
}

inline Model model_mul(const Model& a, const Model& b) {
  Model m;
  for (const auto& [pa, da] : a)
    for (const auto& [pb, db] : b) m[Rational(pa + pb)] += da * db;
  return prune(std::move(m));
}

// Sign of the highest-power digit; 0 for the empty model.
inline int model_sign(const Model& m) {
  if (m.empty()) return 0;
  return sgn(m.rbegin()->second) > 0 ? 1 : -1;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  // Numerator and denominator magnitudes up to 10^6.
  Rational rational(bool allow_zero = true) {
    for (;;) {
      Rational r(between(-1'000'000, 1'000'000), between(1, 1'000'000));
      r.canonicalize();
      if (allow_zero || r != 0) return r;
    }
  }

  // Small integer digits make cancellations and equalities likely.
  Rational digit() {
    if (chance(0.5)) {
      std::int64_t d = 0;
      while (d == 0) d = between(-5, 5);
      return Rational(d);
    }
    return rational(false);
  }

  // Powers come mostly from a small pool so like terms collide.
  Rational power() {
    static const std::vector<Rational> pool = {3, 2, 1, 0, -1, -2, -3, Rational(1, 2),
                                               Rational(-1, 3)};
    if (chance(0.85)) return pool[static_cast<std::size_t>(between(0, pool.size() - 1))];
    return rational();
  }

  std::vector<std::pair<Rational, Rational>> pairs(std::size_t max_terms) {
    std::vector<std::pair<Rational, Rational>> out;
    auto n = static_cast<std::size_t>(between(0, static_cast<std::int64_t>(max_terms)));
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(digit(), power());
    return out;
  }

  GrossNumber number(std::size_t max_terms = 6) {
    return GrossNumber::canonicalize(pairs(max_terms));
  }

  // Non-negative count up to `max`, biased toward small values.
  Integer count(std::uint64_t max) {
    std::uint64_t v;
    if (chance(0.4)) {
      v = std::uniform_int_distribution<std::uint64_t>(0, std::min<std::uint64_t>(max, 12))(rng_);
    } else {
      v = std::uniform_int_distribution<std::uint64_t>(0, max)(rng_);
    }
    return Integer(static_cast<unsigned long>(v));
  }

  // A pair of equal-length words; b often shares a prefix with a.
  std::pair<lex::Word, lex::Word> word_pair(std::size_t max_len, std::uint64_t max_count) {
    auto len = static_cast<std::size_t>(between(1, static_cast<std::int64_t>(max_len)));
    std::vector<Integer> a;
    std::vector<Integer> b;
    auto shared = static_cast<std::size_t>(between(0, static_cast<std::int64_t>(len)));
    for (std::size_t i = 0; i < len; ++i) {
      a.push_back(count(max_count));
      b.push_back(i < shared ? a.back() : count(max_count));
    }
    return {lex::Word(std::move(a)), lex::Word(std::move(b))};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace grossone::testing
