#pragma once

#include "koch24/exact.hpp"
#include "koch24/gf2.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace koch24 {

// Named constructions: "d4", "d6", ... (even length >= 4), "e7", "e8",
// "g24", "t16(<signature>)" and "t24(<signature>)" for the admissible
// nonempty signatures realizable at those lengths. Every build output is
// verified against its documented contract before being returned.
Code build(const std::string& name);

// All names build() accepts, in catalog order (the d family is listed up
// to length 64).
std::vector<std::string> catalog_names();

// Extends a doubly even self-orthogonal seed to a Type II code of the same
// length without introducing new weight-4 words. Deterministic: glue words
// are tried in lexicographic order over the doubly even words of the
// seed's dual, with full backtracking. Returns nullopt when no completion
// exists. The result is re-verified, not trusted from the search.
std::optional<Code> complete_to_type2(const Code& seed, int n);

struct CensusClass {
  Code representative;
  std::int64_t size = 0;
  std::int64_t aut_order = 0;
};

struct CensusReport {
  int n = 0;
  std::vector<Code> codes;  // all distinct Type II codes, canonical forms
  std::int64_t count = 0;
  std::vector<CensusClass> classes;  // permutation-equivalence classes

  // Mass identity: sum over classes of n!/|Aut(rep)| equals the count.
  bool mass_identity_holds() const;
};

// Exhaustive census of Type II codes of length n (hard cap n <= 8; the
// cost explodes beyond that). n = 0 is the degenerate single empty code.
CensusReport enumerate_type2(int n);

// Census core without equivalence classification, usable up to n = 14 for
// the nonexistence checks at lengths not divisible by 8. Every self-dual
// code contains the all-ones word (wt(c) is even for all c in a
// self-orthogonal code, so 1 is in C^perp = C), which seeds the search.
std::vector<Code> search_type2(int n);

// Number of Type II codes of length n = 8, 16, ..., 40:
// product over i = 0..n/2-2 of (2^i + 1).
BigInt count_type2_formula(int n);

// |{pi in S_n : pi(C) = C}| by brute force; n <= 10.
std::int64_t aut_order(const Code& c);

// Permutation equivalence by brute force; n <= 10.
bool equivalent(const Code& a, const Code& b);

}  // namespace koch24
