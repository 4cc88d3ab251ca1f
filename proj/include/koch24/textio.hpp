#pragma once

#include "koch24/gf2.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace koch24 {

// Generator-matrix text format: one row per line over {0,1}, column j is
// coordinate j+1. Lines starting with '#' and blank lines are ignored.
// Rows need not be independent.
struct GeneratorMatrix {
  int n = 0;
  std::vector<std::uint64_t> rows;
};

// Throws std::invalid_argument naming the first offending line.
GeneratorMatrix parse_generator_matrix(std::istream& in);
GeneratorMatrix parse_generator_file(const std::string& path);
Code code_from_file(const std::string& path);

std::string format_word(std::uint64_t bits, int n);
std::uint64_t parse_word(const std::string& line);  // caller checks length
std::vector<std::string> row_strings(const Code& c);

}  // namespace koch24
