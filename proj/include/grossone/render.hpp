#pragma once

#include <string>

#include <json.hpp>

#include "grossone/medal_ranks.hpp"

namespace grossone::cli {

enum class Format { Table, Csv, Json };

// Fixed-width text table. R1 tables mirror the IOC layout and carry no
// score column unless `show_grossone` asks for the paper-style record.
std::string render_table(const medals::RankedTable& table, bool show_grossone);

// rank,code,name,gold,silver,bronze,score_display,score_exact
std::string render_csv(const medals::RankedTable& table);

// Array of {rank, code, name, gold, silver, bronze, score_display, score_exact}.
nlohmann::ordered_json to_json(const medals::RankedTable& table);
std::string render_json(const medals::RankedTable& table);

std::string render(const medals::RankedTable& table, Format format, bool show_grossone);

}  // namespace grossone::cli
