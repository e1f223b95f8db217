#include "grossone/commands.hpp"

#include <CLI11.hpp>

#include <string>
#include <vector>

#include "grossone/calculator.hpp"
#include "grossone/lex_rank.hpp"
#include "grossone/medal_csv.hpp"
#include "grossone/notation.hpp"

namespace grossone::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto end = text.find(sep, start);
    parts.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) {
      return parts;
    }
    start = end + 1;
  }
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

lex::Word parse_word(std::string_view text) {
  std::vector<Integer> counts;
  for (std::string_view part : split(text, ',')) {
    part = strip(part);
    if (part.starts_with('-')) {
      throw lex::NegativeCount(counts.size());
    }
    counts.push_back(parse_natural(part));
  }
  return lex::Word(std::move(counts));
}

const char* verdict(std::strong_ordering c) {
  if (c < 0) return "Less";
  if (c > 0) return "Greater";
  return "Equal";
}

}  // namespace

RankMethod parse_rank_method(std::string_view text) {
  using medals::Method;
  if (text == "r1") return {Method::Lexicographic, {}};
  if (text == "r2") return {Method::Total, medals::weights::kEqual};
  if (text == "r3") return {Method::Weighted, medals::weights::kFibonacci};
  if (text == "per-capita" || text == "r4") return {Method::PerCapita, {}};
  if (text == "per-gdp" || text == "r5") return {Method::PerGdp, {}};
  if (text.starts_with("weighted:")) {
    auto parts = split(text.substr(9), ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("weighted method needs three weights, e.g. weighted:3:2:1");
    }
    medals::WeightSystem w{parse_rational(strip(parts[0])), parse_rational(strip(parts[1])),
                           parse_rational(strip(parts[2]))};
    if (sign(w.gold) < 0 || sign(w.silver) < 0 || sign(w.bronze) < 0) {
      throw std::invalid_argument("weights must be non-negative");
    }
    if (w.gold == 0 && w.silver == 0 && w.bronze == 0) {
      throw medals::AllZeroWeights();
    }
    return {Method::Weighted, w};
  }
  throw std::invalid_argument("unknown rank method '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  if (text == "table") return Format::Table;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "'");
}

medals::RankedTable run_method(std::span<const medals::CountryMedals> table,
                               const RankMethod& method) {
  switch (method.method) {
    case medals::Method::Lexicographic: return medals::rank_r1(table);
    case medals::Method::Total: return medals::rank_total(table);
    case medals::Method::Weighted: return medals::rank_weighted(table, method.weights);
    case medals::Method::PerCapita: return medals::rank_per_capita(table);
    case medals::Method::PerGdp: return medals::rank_per_gdp(table);
  }
  throw std::logic_error("unhandled rank method");
}

int cmd_rank(const std::filesystem::path& input, const RankMethod& method, Format format,
             bool show_grossone, std::ostream& out, std::ostream& err) {
  try {
    auto table = medals::load_medal_csv(input);
    out << render(run_method(table, method), format, show_grossone);
    return kExitOk;
  } catch (const medals::MissingData& e) {
    err << "error: " << e.what() << '\n';
    return kExitMissingData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

int cmd_calc(std::string_view expression, std::ostream& out, std::ostream& err) {
  try {
    GrossNumber value = evaluate(expression);
    out << "ascii: " << format(value, Style::Ascii) << '\n'
        << "paper: " << format(value, Style::Paper) << '\n'
        << "class: " << to_string(classify(value)) << '\n';
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n'
        << "  " << expression << '\n'
        << "  " << std::string(e.position(), ' ') << "^\n";
    return kExitInput;
  } catch (const NonTerminatingQuotient& e) {
    err << "error: " << e.what() << "; the exact quotient has no finite grossone record\n";
    return kExitArithmetic;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << '\n';
    return kExitArithmetic;
  }
}

int cmd_compare(std::string_view word_a, std::string_view word_b, std::ostream& out,
                std::ostream& err) {
  try {
    lex::Word a = parse_word(word_a);
    lex::Word b = parse_word(word_b);
    auto order = lex::lex_compare(a, b);
    GrossNumber ea = lex::encode(a);
    GrossNumber eb = lex::encode(b);
    out << verdict(order) << '\n'
        << "a: " << format(ea, Style::Ascii) << "  (" << format(ea, Style::Paper) << ")\n"
        << "b: " << format(eb, Style::Ascii) << "  (" << format(eb, Style::Paper) << ")\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grossone arithmetic and Olympic medal ranking"};
  app.require_subcommand(1);

  std::string input;
  std::string method_text = "r1";
  std::string format_text = "table";
  bool show_grossone = false;
  auto* rank = app.add_subcommand("rank", "Rank a medal table CSV");
  rank->add_option("-i,--input", input, "CSV file: code,name,gold,silver,bronze[,population,"
                                        "gdp_usd_billion]")
      ->required();
  rank->add_option("-m,--method", method_text,
                   "r1 | r2 | r3 | weighted:G:S:B | per-capita | per-gdp")
      ->capture_default_str();
  rank->add_option("-f,--format", format_text, "table | csv | json")->capture_default_str();
  rank->add_flag("--show-grossone", show_grossone,
                 "add the grossone score column to r1 tables");

  std::string expression;
  auto* calc = app.add_subcommand("calc", "Evaluate a grossone expression, e.g. \"(1/G)*G\"");
  calc->add_option("expression", expression)->required();

  std::string word_a;
  std::string word_b;
  auto* compare = app.add_subcommand("compare", "Compare two count words, e.g. 2,0,0 1,11,0");
  compare->add_option("a", word_a)->required();
  compare->add_option("b", word_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*rank) {
    RankMethod method;
    Format fmt;
    try {
      method = parse_rank_method(method_text);
      fmt = parse_format(format_text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
    return cmd_rank(input, method, fmt, show_grossone, out, err);
  }
  if (*calc) {
    return cmd_calc(expression, out, err);
  }
  return cmd_compare(word_a, word_b, out, err);
}

}  // namespace grossone::cli
