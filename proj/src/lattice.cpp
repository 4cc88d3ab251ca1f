#include "koch24/lattice.hpp"

#include "koch24/enumerators.hpp"

#include <stdexcept>

namespace koch24 {

RootCountReport root_count(const Code& c) {
  if (!is_doubly_even(c))
    throw std::invalid_argument("root counting requires a doubly even code (even lattice)");
  if (c.n > 24) throw std::invalid_argument("root enumeration capped at n <= 24");
  if (c.dim() > kEnumCap)
    throw std::invalid_argument("dimension exceeds the enumeration cap");

  RootCountReport rep;
  rep.n = c.n;

  // Integer vectors v with |v|^2 = 4 and v mod 2 in C: either +-2e_i
  // (residue 0, always a codeword), or four +-1 entries whose support is
  // a weight-4 codeword (16 sign patterns each). Supports are enumerated
  // directly and tested for membership, independently of the tetrad
  // machinery.
  rep.count_enum = 2 * c.n;
  for (int a = 0; a < c.n; ++a)
    for (int b = a + 1; b < c.n; ++b)
      for (int d = b + 1; d < c.n; ++d)
        for (int e = d + 1; e < c.n; ++e) {
          const std::uint64_t support = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                        (std::uint64_t{1} << d) | (std::uint64_t{1} << e);
          if (contains(c, support)) rep.count_enum += 16;
        }

  const WeightDistribution dist = weight_distribution(c);
  rep.axis_roots = 2 * c.n;
  rep.tetrad_roots = c.n >= 4 ? 16 * dist.counts[4] : 0;
  rep.count_formula = rep.axis_roots + rep.tetrad_roots;
  return rep;
}

}  // namespace koch24
