#pragma once

#include "koch24/exact.hpp"
#include "koch24/gf2.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace koch24 {

enum class TetradFamily { E, D };

// One of the irreducible tetrad codes: d_{2k} (k >= 2), e7 or e8.
struct TetradLabel {
  TetradFamily family = TetradFamily::D;
  int length = 4;  // block length: 2k for d, 7 or 8 for e

  friend bool operator==(const TetradLabel&, const TetradLabel&) = default;
  // Canonical term order: e7, e8, then d components ascending by size.
  friend bool operator<(const TetradLabel& a, const TetradLabel& b) {
    if (a.family != b.family) return a.family == TetradFamily::E;
    return a.length < b.length;
  }
};

TetradLabel d_label(int k);  // d_{2k}
inline constexpr TetradLabel kE7{TetradFamily::E, 7};
inline constexpr TetradLabel kE8{TetradFamily::E, 8};

int label_dim(const TetradLabel& l);          // k-1 / 3 / 4
std::int64_t label_t4(const TetradLabel& l);  // k(k-1)/2 / 7 / 14
Rat label_eta(const TetradLabel& l);          // (k-1)/4 / 1 / 7/4
int label_coverage(const TetradLabel& l);     // 4*eta: tetrads through each coordinate
std::string to_string(const TetradLabel& l);  // "d10", "e7", "e8"

// Multiset of irreducible tetrad-code labels, rendered canonically as in
// "6d4", "2e7+d10", "e8+d16" or "empty".
class SystemSignature {
 public:
  SystemSignature() = default;
  explicit SystemSignature(const std::vector<TetradLabel>& labels);

  static SystemSignature parse(const std::string& text);

  void add(const TetradLabel& l, int count = 1);
  bool empty() const { return terms_.empty(); }
  int total_length() const;
  Rat common_eta() const;  // eta shared by all terms; throws if mixed or empty
  const std::map<TetradLabel, int>& terms() const { return terms_; }
  std::string str() const;

  friend bool operator==(const SystemSignature&, const SystemSignature&) = default;
  friend bool operator<(const SystemSignature& a, const SystemSignature& b) {
    return a.terms_ < b.terms_;
  }

 private:
  std::map<TetradLabel, int> terms_;
};

struct TetradComponent {
  std::vector<int> support;  // 1-based coordinates, ascending
  TetradLabel label;
  int length = 0;  // m = support size
  int dim = 0;
  std::int64_t t4 = 0;
  Rat eta;  // t4 / m
};

struct TetradDecomposition {
  std::vector<TetradComponent> components;  // ordered by smallest coordinate
  std::vector<int> uncovered;               // 1-based coordinates in no tetrad
  std::int64_t total_t4 = 0;
};

// All weight-4 codewords in lexicographic order.
std::vector<Word> tetrads(const Code& c);

// The subcode generated by the tetrad system.
Code tetrad_subcode(const Code& c);

// Splits tau(C) into connected components of the co-coverage graph and
// classifies each against the irreducible tetrad codes. A component that
// matches no label is an internal-consistency failure and throws
// std::logic_error.
TetradDecomposition decompose(const Code& c);

// Classifies a support-connected code spanned by its weight-4 words,
// given on its own support (length = support size).
TetradLabel classify_component(const Code& restricted);

Rat tetrad_number(const TetradComponent& comp);

SystemSignature signature_of(const TetradDecomposition& d);

struct PropReport {
  bool pass = false;
  bool empty_system = false;
  std::int64_t c4 = 0;
  Rat eta_expected;  // |C_4| / 24
  std::vector<TetradComponent> components;
  std::string failure;
};

// Proposition for Type II length-24 codes: the tetrad system is empty or
// covers every coordinate, and every component has tetrad number |C_4|/24.
PropReport prop_check(const Code& c);

struct KochVerdict {
  bool pass = false;
  SystemSignature signature;
};

// Membership of the tetrad system in the nine admissible length-24 systems.
KochVerdict koch_check(const Code& c);

// The nine allowed signatures (empty plus eight nonempty).
const std::vector<SystemSignature>& koch_allowed_signatures();

// All nonempty label multisets of total length n whose members share one
// tetrad number, sorted by (eta, rendered string).
std::vector<SystemSignature> admissible_systems(int n);

}  // namespace koch24
