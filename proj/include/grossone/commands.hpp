#pragma once

#include <filesystem>
#include <ostream>
#include <string_view>

#include "grossone/medal_ranks.hpp"
#include "grossone/render.hpp"

namespace grossone::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;       // usage, I/O, CSV or parse errors
inline constexpr int kExitMissingData = 3; // population/GDP absent for R4/R5
inline constexpr int kExitArithmetic = 4;  // non-terminating quotient, division by zero

struct RankMethod {
  medals::Method method = medals::Method::Lexicographic;
  medals::WeightSystem weights = medals::weights::kFibonacci;
};

// r1 | r2 | r3 | weighted:G:S:B | per-capita | per-gdp  (r4/r5 are accepted
// aliases). Throws std::invalid_argument on anything else.
RankMethod parse_rank_method(std::string_view text);

Format parse_format(std::string_view text);

medals::RankedTable run_method(std::span<const medals::CountryMedals> table,
                               const RankMethod& method);

int cmd_rank(const std::filesystem::path& input, const RankMethod& method, Format format,
             bool show_grossone, std::ostream& out, std::ostream& err);
int cmd_calc(std::string_view expression, std::ostream& out, std::ostream& err);
int cmd_compare(std::string_view word_a, std::string_view word_b, std::ostream& out,
                std::ostream& err);

// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grossone::cli
