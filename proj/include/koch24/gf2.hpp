#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace koch24 {

inline constexpr int kMaxLength = 64;  // a word fits one machine word
inline constexpr int kEnumCap = 24;    // cap on 2^k codeword enumeration

// All-ones mask over the low n bit positions.
inline std::uint64_t coord_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

// A word of F_2^n. Coordinate i (1-based) is stored in bit i-1, so the
// leftmost character of the text format is the lowest bit.
struct Word {
  int n = 0;
  std::uint64_t bits = 0;
  friend bool operator==(const Word&, const Word&) = default;
};

Word make_word(int n, std::uint64_t bits);
inline int weight(const Word& w) { return std::popcount(w.bits); }

// Lexicographic order on words read coordinate 1 first.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t d = a ^ b;
  if (d == 0) return false;
  const std::uint64_t first_diff = d & (0 - d);  // lowest differing coordinate
  return (a & first_diff) == 0;
}

// A binary linear code in reduced-row-echelon generator form with pivot
// columns strictly increasing. The RREF is canonical: two codes are equal
// as subspaces iff (n, rows) compare equal.
struct Code {
  int n = 0;
  std::vector<std::uint64_t> rows;
  std::vector<int> pivots;  // 0-based pivot positions, one per row

  int dim() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const Code& a, const Code& b) {
    return a.n == b.n && a.rows == b.rows;
  }
};

// Canonicalizes an arbitrary (possibly dependent, possibly empty) list of
// spanning rows. Throws std::invalid_argument for n outside 1..64 or rows
// with bits beyond coordinate n.
Code make_code(int n, std::vector<std::uint64_t> spanning_rows);
Code make_code(const std::vector<Word>& rows, int n);

bool contains(const Code& c, std::uint64_t word);

// Visits all 2^k codewords, zero first, via a Gray-code walk.
template <class F>
void for_each_codeword(const Code& c, F&& f) {
  f(std::uint64_t{0});
  if (c.rows.empty()) return;
  std::uint64_t w = 0;
  const std::uint64_t total = std::uint64_t{1} << c.dim();
  for (std::uint64_t i = 1; i < total; ++i) {
    w ^= c.rows[static_cast<std::size_t>(std::countr_zero(i))];
    f(w);
  }
}

// Materialized codeword list; requires dim <= kEnumCap.
std::vector<std::uint64_t> codewords(const Code& c);

enum class DualityClass { NotSelfOrthogonal, SelfOrthogonal, TypeI, TypeII };
std::string to_string(DualityClass d);

// C^perp under the standard bilinear pairing; dim C + dim C^perp = n.
Code dual(const Code& c);

DualityClass classify_self_duality(const Code& c);

// True iff every codeword has weight divisible by 4. Decided on the
// generators: all generator weights must be 0 mod 4 and all pairwise
// supports must meet evenly.
bool is_doubly_even(const Code& c);

// Minimum weight over nonzero codewords by full enumeration.
// Throws std::domain_error on the zero code (no nonzero words) and
// std::invalid_argument when dim > kEnumCap.
int min_distance(const Code& c);

// Type II codes only: distance meets the bound 4*floor(n/24) + 4.
bool is_extremal(const Code& c);

// Components placed side by side, coordinates assigned left to right.
Code direct_sum(std::span<const Code> parts);

// perm[i] is the 0-based image of coordinate i; result is canonicalized.
Code apply_permutation(const Code& c, std::span<const int> perm);

}  // namespace koch24
