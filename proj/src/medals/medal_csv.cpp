#include "grossone/medal_csv.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <string_view>

namespace grossone::medals {

namespace {

constexpr std::array<std::string_view, 7> kColumns = {
    "code", "name", "gold", "silver", "bronze", "population", "gdp_usd_billion"};

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    return {};
  }
  auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Splits one record. A quoted field may span physical lines, so more input
// is pulled from `in` while a quote is open.
std::vector<std::string> split_record(std::string line, std::istream& in, std::size_t& line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0;; ++i) {
    if (i == line.size()) {
      if (!quoted) {
        break;
      }
      std::string next;
      if (!std::getline(in, next)) {
        throw CsvError(line_no, "unterminated quoted field");
      }
      ++line_no;
      if (!next.empty() && next.back() == '\r') next.pop_back();
      field += '\n';
      line = std::move(next);
      i = static_cast<std::size_t>(-1);
      continue;
    }
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && trim(field).empty()) {
      quoted = true;
      was_quoted = true;
      field.clear();
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  fields.push_back(was_quoted ? field : trim(field));
  return fields;
}

std::uint64_t parse_count(const std::string& text, std::size_t line, std::string_view column) {
  try {
    Integer n = parse_natural(text);
    if (!n.fits_ulong_p()) {
      throw std::invalid_argument("too large");
    }
    return n.get_ui();
  } catch (const std::invalid_argument&) {
    throw CsvError(line, std::string(column) + " must be a non-negative integer, got '" + text +
                             "'");
  }
}

}  // namespace

CsvError::CsvError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

std::vector<CountryMedals> read_medal_csv(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;

  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) {
      line.erase(0, 3);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    header = split_record(line, in, line_no);
  }
  if (header.empty()) {
    throw CsvError(line_no, "missing header");
  }
  if (header.size() < 5 || header.size() > kColumns.size()) {
    throw CsvError(line_no, "header must be code,name,gold,silver,bronze[,population,"
                            "gdp_usd_billion]");
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (lower(header[i]) != kColumns[i]) {
      throw CsvError(line_no, "expected column '" + std::string(kColumns[i]) + "', got '" +
                                  header[i] + "'");
    }
  }

  std::vector<CountryMedals> rows;
  std::set<std::string> codes;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::size_t row_line = line_no;
    auto fields = split_record(line, in, line_no);
    if (fields.size() != header.size()) {
      throw CsvError(row_line, "expected " + std::to_string(header.size()) + " fields, got " +
                                   std::to_string(fields.size()));
    }
    CountryMedals c;
    c.code = fields[0];
    if (!is_ioc_code(c.code)) {
      throw CsvError(row_line, "invalid IOC code '" + c.code + "'");
    }
    if (!codes.insert(c.code).second) {
      throw CsvError(row_line, "duplicate country code " + c.code);
    }
    c.name = fields[1];
    c.gold = parse_count(fields[2], row_line, "gold");
    c.silver = parse_count(fields[3], row_line, "silver");
    c.bronze = parse_count(fields[4], row_line, "bronze");
    if (fields.size() > 5 && !fields[5].empty()) {
      c.population = parse_count(fields[5], row_line, "population");
      if (*c.population == 0) {
        throw CsvError(row_line, "population must be positive");
      }
    }
    if (fields.size() > 6 && !fields[6].empty()) {
      try {
        c.gdp_billion = parse_rational(fields[6]);
      } catch (const std::exception&) {
        throw CsvError(row_line, "gdp_usd_billion must be a number, got '" + fields[6] + "'");
      }
      if (sign(*c.gdp_billion) <= 0) {
        throw CsvError(row_line, "gdp_usd_billion must be positive");
      }
    }
    rows.push_back(std::move(c));
  }
  if (rows.empty()) {
    throw CsvError(line_no, "no data rows");
  }
  return rows;
}

std::vector<CountryMedals> load_medal_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw CsvError(0, "cannot open " + path.string());
  }
  return read_medal_csv(in);
}

}  // namespace grossone::medals
