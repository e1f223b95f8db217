#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grossone/gross_number.hpp"
#include "grossone/lex_rank.hpp"

namespace grossone::medals {

struct CountryMedals {
  std::string code;  // IOC code, three uppercase letters
  std::string name;
  std::uint64_t gold = 0;
  std::uint64_t silver = 0;
  std::uint64_t bronze = 0;
  std::optional<std::uint64_t> population;  // people
  std::optional<Rational> gdp_billion;      // US$ billions

  std::uint64_t total() const { return gold + silver + bronze; }
  lex::Word word() const;
};

bool is_ioc_code(std::string_view code);

/// Points per gold, silver and bronze medal.
struct WeightSystem {
  Rational gold;
  Rational silver;
  Rational bronze;
};

namespace weights {
inline const WeightSystem kEqual{1, 1, 1};
inline const WeightSystem kFibonacci{3, 2, 1};
inline const WeightSystem kExponential{4, 2, 1};
inline const WeightSystem kLondon1908{5, 3, 1};
inline const WeightSystem k532{5, 3, 2};
inline const WeightSystem k621{6, 2, 1};
inline const WeightSystem k1051{10, 5, 1};
}  // namespace weights

enum class Method { Lexicographic, Total, Weighted, PerCapita, PerGdp };

/// R1 scores are grossone numbers; every other method scores a rational.
using Score = std::variant<GrossNumber, Rational>;

struct RankedRow {
  std::size_t rank;  // 1 + number of rows with a strictly better score
  CountryMedals country;
  Score score;
};

struct RankedTable {
  Method method;
  std::vector<RankedRow> rows;
};

class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyTable : public RankError {
 public:
  EmptyTable() : RankError("medal table has no rows") {}
};

class DuplicateCode : public RankError {
 public:
  explicit DuplicateCode(const std::string& code)
      : RankError("duplicate country code " + code), code_(code) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class InvalidCountry : public RankError {
 public:
  using RankError::RankError;
};

class AllZeroWeights : public RankError {
 public:
  AllZeroWeights() : RankError("weight system must have a nonzero weight") {}
};

/// A row lacks the population or GDP figure its rank method divides by.
class MissingData : public RankError {
 public:
  MissingData(const std::string& what, const std::string& code)
      : RankError(code + ": missing " + what), code_(code) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class MissingPopulation : public MissingData {
 public:
  explicit MissingPopulation(const std::string& code) : MissingData("population", code) {}
};

class MissingGdp : public MissingData {
 public:
  explicit MissingGdp(const std::string& code) : MissingData("GDP", code) {}
};

// R1: IOC order. Score is gold*G^2 + silver*G + bronze; identical scores
// share a rank and are listed by IOC code.
RankedTable rank_r1(std::span<const CountryMedals> table);

// R2-R5 order by exact score, then gold, silver and bronze counts, then IOC
// code. Rows with identical scores share a rank number.
RankedTable rank_total(std::span<const CountryMedals> table);
RankedTable rank_weighted(std::span<const CountryMedals> table, const WeightSystem& weights);
// Medals per 10^7 people.
RankedTable rank_per_capita(std::span<const CountryMedals> table);
// Medals per US$100 billion of GDP.
RankedTable rank_per_gdp(std::span<const CountryMedals> table);

/// Human-facing score: paper-style record for R1, one decimal for R4/R5,
/// exact rational otherwise.
std::string score_display(Method method, const Score& score);

/// Lossless score text: ascii grossone for R1, "a/b" rational otherwise.
std::string score_exact(const Score& score);

}  // namespace grossone::medals
