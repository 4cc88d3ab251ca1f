#pragma once

#include "koch24/gf2.hpp"

#include <cstdint>

namespace koch24 {

// Norm-4 vector count of the rescaled Construction A lattice of a doubly
// even code, computed two independent ways: support enumeration with
// membership tests versus 2n + 16*|C_4| with |C_4| from codeword
// enumeration.
struct RootCountReport {
  int n = 0;
  std::int64_t count_enum = 0;
  std::int64_t count_formula = 0;
  std::int64_t axis_roots = 0;    // +-2e_i: always 2n since 0 is a codeword
  std::int64_t tetrad_roots = 0;  // 16 sign patterns per weight-4 codeword

  bool agree() const { return count_enum == count_formula; }
};

RootCountReport root_count(const Code& c);

}  // namespace koch24
