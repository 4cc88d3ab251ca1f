#include "koch24/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace koch24 {

Word make_word(int n, std::uint64_t bits) {
  if (n < 1 || n > kMaxLength)
    throw std::invalid_argument("word length must be in 1..64, got " + std::to_string(n));
  if ((bits & ~coord_mask(n)) != 0)
    throw std::invalid_argument("word has bits set beyond coordinate " + std::to_string(n));
  return Word{n, bits};
}

Code make_code(int n, std::vector<std::uint64_t> rows) {
  if (n < 1 || n > kMaxLength)
    throw std::invalid_argument("code length must be in 1..64, got " + std::to_string(n));
  const std::uint64_t mask = coord_mask(n);
  for (std::uint64_t r : rows)
    if ((r & ~mask) != 0)
      throw std::invalid_argument("generator row has bits set beyond coordinate " + std::to_string(n));

  Code c;
  c.n = n;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot_row = rank;
    while (pivot_row < rows.size() && (rows[pivot_row] & bit) == 0) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[rank], rows[pivot_row]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
    c.pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  c.rows = std::move(rows);
  return c;
}

Code make_code(const std::vector<Word>& rows, int n) {
  std::vector<std::uint64_t> raw;
  raw.reserve(rows.size());
  for (const Word& w : rows) {
    if (w.n != n)
      throw std::invalid_argument("row length " + std::to_string(w.n) +
                                  " does not match code length " + std::to_string(n));
    raw.push_back(w.bits);
  }
  return make_code(n, std::move(raw));
}

bool contains(const Code& c, std::uint64_t word) {
  for (std::size_t i = 0; i < c.rows.size(); ++i)
    if (word & (std::uint64_t{1} << c.pivots[i])) word ^= c.rows[i];
  return word == 0;
}

std::vector<std::uint64_t> codewords(const Code& c) {
  if (c.dim() > kEnumCap)
    throw std::invalid_argument("dimension " + std::to_string(c.dim()) +
                                " exceeds the enumeration cap " + std::to_string(kEnumCap));
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << c.dim());
  for_each_codeword(c, [&](std::uint64_t w) { out.push_back(w); });
  return out;
}

std::string to_string(DualityClass d) {
  switch (d) {
    case DualityClass::NotSelfOrthogonal: return "NotSelfOrthogonal";
    case DualityClass::SelfOrthogonal: return "SelfOrthogonal";
    case DualityClass::TypeI: return "TypeI";
    case DualityClass::TypeII: return "TypeII";
  }
  return "?";
}

Code dual(const Code& c) {
  // Standard kernel basis from the RREF: one vector per free column f,
  // with a 1 at f and a 1 at pivot p_r whenever row r has a 1 at f.
  std::vector<bool> is_pivot(static_cast<std::size_t>(c.n), false);
  for (int p : c.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::uint64_t> kernel;
  kernel.reserve(static_cast<std::size_t>(c.n) - c.rows.size());
  for (int f = 0; f < c.n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::size_t r = 0; r < c.rows.size(); ++r)
      if (c.rows[r] & (std::uint64_t{1} << f)) v |= std::uint64_t{1} << c.pivots[r];
    kernel.push_back(v);
  }
  return make_code(c.n, std::move(kernel));
}

namespace {
inline int pair_dot(std::uint64_t a, std::uint64_t b) {
  return std::popcount(a & b) & 1;
}
}  // namespace

DualityClass classify_self_duality(const Code& c) {
  for (std::size_t i = 0; i < c.rows.size(); ++i)
    for (std::size_t j = i; j < c.rows.size(); ++j)
      if (pair_dot(c.rows[i], c.rows[j])) return DualityClass::NotSelfOrthogonal;
  if (2 * c.dim() < c.n) return DualityClass::SelfOrthogonal;
  // Self-dual. Doubly even iff every generator weight is 0 mod 4: pairwise
  // supports already meet evenly, so weights add mod 4 across sums.
  for (std::uint64_t r : c.rows)
    if (std::popcount(r) % 4 != 0) return DualityClass::TypeI;
  return DualityClass::TypeII;
}

bool is_doubly_even(const Code& c) {
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    if (std::popcount(c.rows[i]) % 4 != 0) return false;
    for (std::size_t j = i + 1; j < c.rows.size(); ++j)
      if (pair_dot(c.rows[i], c.rows[j])) return false;
  }
  return true;
}

int min_distance(const Code& c) {
  if (c.dim() == 0) throw std::domain_error("minimum distance of the zero code is undefined");
  if (c.dim() > kEnumCap)
    throw std::invalid_argument("dimension " + std::to_string(c.dim()) +
                                " exceeds the enumeration cap " + std::to_string(kEnumCap));
  int best = c.n;
  std::uint64_t w = 0;
  const std::uint64_t total = std::uint64_t{1} << c.dim();
  for (std::uint64_t i = 1; i < total; ++i) {
    w ^= c.rows[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, std::popcount(w));
  }
  return best;
}

bool is_extremal(const Code& c) {
  if (classify_self_duality(c) != DualityClass::TypeII)
    throw std::invalid_argument("extremality is defined for Type II codes only");
  return min_distance(c) == 4 * (c.n / 24) + 4;
}

Code direct_sum(std::span<const Code> parts) {
  int n = 0;
  for (const Code& p : parts) n += p.n;
  if (n < 1 || n > kMaxLength)
    throw std::invalid_argument("direct sum length " + std::to_string(n) + " outside 1..64");
  std::vector<std::uint64_t> rows;
  int offset = 0;
  for (const Code& p : parts) {
    for (std::uint64_t r : p.rows) rows.push_back(r << offset);
    offset += p.n;
  }
  return make_code(n, std::move(rows));
}

Code apply_permutation(const Code& c, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != c.n)
    throw std::invalid_argument("permutation size does not match code length");
  std::vector<std::uint64_t> rows;
  rows.reserve(c.rows.size());
  for (std::uint64_t r : c.rows) {
    std::uint64_t out = 0;
    while (r) {
      const int i = std::countr_zero(r);
      out |= std::uint64_t{1} << perm[static_cast<std::size_t>(i)];
      r &= r - 1;
    }
    rows.push_back(out);
  }
  return make_code(c.n, std::move(rows));
}

}  // namespace koch24
