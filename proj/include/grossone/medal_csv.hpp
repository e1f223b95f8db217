#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grossone/medal_ranks.hpp"

namespace grossone::medals {

// Line 0 means the file itself could not be read.
class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Header (required): code,name,gold,silver,bronze[,population[,gdp_usd_billion]]
// Quoted fields follow RFC 4180. Empty population/GDP cells mean "unknown".
std::vector<CountryMedals> read_medal_csv(std::istream& in);
std::vector<CountryMedals> load_medal_csv(const std::filesystem::path& path);

}  // namespace grossone::medals
