#include "grossone/medal_ranks.hpp"

#include <algorithm>
#include <set>

#include "grossone/notation.hpp"

namespace grossone::medals {

namespace {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));

Integer count(std::uint64_t n) { return Integer(static_cast<unsigned long>(n)); }

Rational medal_sum(const CountryMedals& c) {
  return Rational(count(c.gold) + count(c.silver) + count(c.bronze));
}

void validate(std::span<const CountryMedals> table) {
  if (table.empty()) {
    throw EmptyTable();
  }
  std::set<std::string_view> seen;
  for (const CountryMedals& c : table) {
    if (!is_ioc_code(c.code)) {
      throw InvalidCountry("invalid IOC code '" + c.code + "'");
    }
    if (!seen.insert(c.code).second) {
      throw DuplicateCode(c.code);
    }
    if (c.population && *c.population == 0) {
      throw InvalidCountry(c.code + ": population must be positive");
    }
    if (c.gdp_billion && sign(*c.gdp_billion) <= 0) {
      throw InvalidCountry(c.code + ": GDP must be positive");
    }
  }
}

int order(const GrossNumber& a, const GrossNumber& b) {
  auto c = compare(a, b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int order(const Rational& a, const Rational& b) { return cmp(a, b); }

// Sorts by descending score, then by `tiebreak`, and assigns competition
// rank numbers from exact score equality.
template <typename ScoreT, typename ScoreFn, typename TieBreak>
RankedTable rank_by(Method method, std::span<const CountryMedals> table, ScoreFn score_of,
                    TieBreak before) {
  struct Scored {
    const CountryMedals* country;
    ScoreT score;
  };
  std::vector<Scored> scored;
  scored.reserve(table.size());
  for (const CountryMedals& c : table) {
    scored.push_back({&c, score_of(c)});
  }
  std::sort(scored.begin(), scored.end(), [&](const Scored& x, const Scored& y) {
    int c = order(x.score, y.score);
    if (c != 0) {
      return c > 0;
    }
    return before(*x.country, *y.country);
  });

  RankedTable out{method, {}};
  out.rows.reserve(scored.size());
  for (std::size_t i = 0; i < scored.size(); ++i) {
    std::size_t rank = i + 1;
    if (i > 0 && order(scored[i].score, scored[i - 1].score) == 0) {
      rank = out.rows.back().rank;
    }
    out.rows.push_back({rank, *scored[i].country, Score(scored[i].score)});
  }
  return out;
}

bool by_code(const CountryMedals& a, const CountryMedals& b) { return a.code < b.code; }

bool by_medals_then_code(const CountryMedals& a, const CountryMedals& b) {
  if (a.gold != b.gold) return a.gold > b.gold;
  if (a.silver != b.silver) return a.silver > b.silver;
  if (a.bronze != b.bronze) return a.bronze > b.bronze;
  return a.code < b.code;
}

}  // namespace

lex::Word CountryMedals::word() const {
  return lex::Word(std::vector<Integer>{count(gold), count(silver), count(bronze)});
}

bool is_ioc_code(std::string_view code) {
  return code.size() == 3 &&
         std::all_of(code.begin(), code.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

RankedTable rank_r1(std::span<const CountryMedals> table) {
  validate(table);
  return rank_by<GrossNumber>(
      Method::Lexicographic, table, [](const CountryMedals& c) { return lex::encode(c.word()); },
      by_code);
}

RankedTable rank_total(std::span<const CountryMedals> table) {
  validate(table);
  return rank_by<Rational>(
      Method::Total, table, medal_sum,
      by_medals_then_code);
}

RankedTable rank_weighted(std::span<const CountryMedals> table, const WeightSystem& weights) {
  if (sign(weights.gold) < 0 || sign(weights.silver) < 0 || sign(weights.bronze) < 0) {
    throw RankError("weights must be non-negative");
  }
  if (weights.gold == 0 && weights.silver == 0 && weights.bronze == 0) {
    throw AllZeroWeights();
  }
  validate(table);
  return rank_by<Rational>(
      Method::Weighted, table,
      [&](const CountryMedals& c) {
        return Rational(weights.gold * Rational(count(c.gold)) +
                        weights.silver * Rational(count(c.silver)) +
                        weights.bronze * Rational(count(c.bronze)));
      },
      by_medals_then_code);
}

RankedTable rank_per_capita(std::span<const CountryMedals> table) {
  validate(table);
  for (const CountryMedals& c : table) {
    if (!c.population) {
      throw MissingPopulation(c.code);
    }
  }
  return rank_by<Rational>(
      Method::PerCapita, table,
      [](const CountryMedals& c) {
        return Rational(medal_sum(c) * 10'000'000 / Rational(count(*c.population)));
      },
      by_medals_then_code);
}

RankedTable rank_per_gdp(std::span<const CountryMedals> table) {
  validate(table);
  for (const CountryMedals& c : table) {
    if (!c.gdp_billion) {
      throw MissingGdp(c.code);
    }
  }
  return rank_by<Rational>(
      Method::PerGdp, table,
      [](const CountryMedals& c) { return Rational(medal_sum(c) * 100 / *c.gdp_billion); },
      by_medals_then_code);
}

std::string score_display(Method method, const Score& score) {
  if (const auto* g = std::get_if<GrossNumber>(&score)) {
    return format(*g, Style::Paper);
  }
  const Rational& r = std::get<Rational>(score);
  if (method == Method::PerCapita || method == Method::PerGdp) {
    return to_fixed(r, 1);
  }
  return to_string(r);
}

std::string score_exact(const Score& score) {
  if (const auto* g = std::get_if<GrossNumber>(&score)) {
    return format(*g, Style::Ascii);
  }
  return to_string(std::get<Rational>(score));
}

}  // namespace grossone::medals
