#include "koch24/textio.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace koch24 {

namespace {
std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}
}  // namespace

GeneratorMatrix parse_generator_matrix(std::istream& in) {
  GeneratorMatrix m;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.size() > kMaxLength)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": row length " +
                                  std::to_string(line.size()) + " exceeds 64");
    if (m.n == 0) {
      m.n = static_cast<int>(line.size());
    } else if (static_cast<int>(line.size()) != m.n) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": row length " +
                                  std::to_string(line.size()) + " does not match n=" +
                                  std::to_string(m.n));
    }
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (line[j] == '1')
        bits |= std::uint64_t{1} << j;
      else if (line[j] != '0')
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": invalid character '" + std::string(1, line[j]) + "'");
    }
    m.rows.push_back(bits);
  }
  if (m.rows.empty()) throw std::invalid_argument("no generator rows in input");
  return m;
}

GeneratorMatrix parse_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return parse_generator_matrix(in);
}

Code code_from_file(const std::string& path) {
  GeneratorMatrix m = parse_generator_file(path);
  return make_code(m.n, std::move(m.rows));
}

std::string format_word(std::uint64_t bits, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j)
    if (bits & (std::uint64_t{1} << j)) s[static_cast<std::size_t>(j)] = '1';
  return s;
}

std::uint64_t parse_word(const std::string& line) {
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < line.size(); ++j)
    if (line[j] == '1') bits |= std::uint64_t{1} << j;
  return bits;
}

std::vector<std::string> row_strings(const Code& c) {
  std::vector<std::string> out;
  out.reserve(c.rows.size());
  for (std::uint64_t r : c.rows) out.push_back(format_word(r, c.n));
  return out;
}

}  // namespace koch24
