#include "grossone/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace grossone::cli {

namespace {

// Code points, which is what a terminal column count needs for the ① glyph.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string render_table(const medals::RankedTable& table, bool show_grossone) {
  const bool lexicographic = table.method == medals::Method::Lexicographic;
  std::vector<std::string> header = {"Rank", "Code", "Name", "Gold", "Silver", "Bronze"};
  if (!lexicographic) {
    header.push_back("Score");
  } else if (show_grossone) {
    header.push_back("Grossone score");
  }
  // Numeric columns are right-aligned.
  const std::vector<bool> right = {true, false, false, true, true, true, !lexicographic};

  std::vector<std::vector<std::string>> cells;
  for (const auto& row : table.rows) {
    const auto& c = row.country;
    std::vector<std::string> line = {std::to_string(row.rank), c.code,
                                     c.name,                   std::to_string(c.gold),
                                     std::to_string(c.silver), std::to_string(c.bronze)};
    if (header.size() == 7) {
      line.push_back(medals::score_display(table.method, row.score));
    }
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    width[i] = display_width(header[i]);
    for (const auto& line : cells) {
      width[i] = std::max(width[i], display_width(line[i]));
    }
  }

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      std::string pad(width[i] - display_width(line[i]), ' ');
      if (i > 0) text += "  ";
      text += right[i] ? pad + line[i] : line[i] + pad;
    }
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << '\n';
  };
  emit(header);
  std::size_t rule = 0;
  for (std::size_t w : width) rule += w;
  out << std::string(rule + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& line : cells) {
    emit(line);
  }
  return out.str();
}

std::string render_csv(const medals::RankedTable& table) {
  std::ostringstream out;
  out << "rank,code,name,gold,silver,bronze,score_display,score_exact\n";
  for (const auto& row : table.rows) {
    const auto& c = row.country;
    out << row.rank << ',' << c.code << ',' << csv_field(c.name) << ',' << c.gold << ','
        << c.silver << ',' << c.bronze << ','
        << csv_field(medals::score_display(table.method, row.score)) << ','
        << csv_field(medals::score_exact(row.score)) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json to_json(const medals::RankedTable& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    const auto& c = row.country;
    rows.push_back({{"rank", row.rank},
                    {"code", c.code},
                    {"name", c.name},
                    {"gold", c.gold},
                    {"silver", c.silver},
                    {"bronze", c.bronze},
                    {"score_display", medals::score_display(table.method, row.score)},
                    {"score_exact", medals::score_exact(row.score)}});
  }
  return rows;
}

std::string render_json(const medals::RankedTable& table) { return to_json(table).dump(2) + '\n'; }

std::string render(const medals::RankedTable& table, Format format, bool show_grossone) {
  switch (format) {
    case Format::Csv: return render_csv(table);
    case Format::Json: return render_json(table);
    case Format::Table: break;
  }
  return render_table(table, show_grossone);
}

}  // namespace grossone::cli
