#pragma once

#include "koch24/exact.hpp"
#include "koch24/gf2.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace koch24 {

// Element of the ring Q[sqrt(2)], stored as an exact pair a + b*sqrt(2).
struct QSqrt2 {
  Rat a;
  Rat b;

  bool is_zero() const { return a == 0 && b == 0; }
  friend bool operator==(const QSqrt2&, const QSqrt2&) = default;
  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a, -x.b}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend QSqrt2 operator*(const QSqrt2& x, const Rat& r) { return {x.a * r, x.b * r}; }
};

std::string qsqrt2_str(const QSqrt2& q);

// Homogeneous bivariate polynomial of degree D over Q[sqrt(2)]:
// coeff[w] multiplies x^(D-w) y^w. The zero polynomial keeps its nominal
// degree, and equality compares degree and all coefficients.
struct HomoPoly2 {
  int degree = 0;
  std::vector<QSqrt2> coeff;  // D+1 entries

  bool is_zero() const;
  friend bool operator==(const HomoPoly2&, const HomoPoly2&) = default;
};

HomoPoly2 zero_poly(int degree);

struct WeightDistribution {
  int n = 0;
  std::vector<std::int64_t> counts;  // counts[w] = |C_w|, w = 0..n

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// Discrete harmonic form of degree 0 or 1. Degree 1 means a zero-sum
// linear form P(c) = sum of coeffs[i] over the support of c; degree 0 is
// a constant.
struct HarmonicLinForm {
  int n = 0;
  int degree = 0;
  std::vector<Rat> coeffs;
};

HarmonicLinForm constant_form(int n, Rat value);
HarmonicLinForm linear_form(int n, std::vector<Rat> coeffs);  // validates zero sum
// The canonical basis form with P_i(c) = n*c_i - wt(c).
HarmonicLinForm unit_form(int n, int i);  // i is 1-based

WeightDistribution weight_distribution(const Code& c);

// W_{C,P}(x,y) = sum over codewords of P(c) x^(n-wt) y^wt.
HomoPoly2 hwe(const Code& c, const HarmonicLinForm& p);

// Substitutes x <- (x+y)/sqrt2, y <- (x-y)/sqrt2 and expands exactly.
// An involution, linear over Q[sqrt(2)].
HomoPoly2 sigma_transform(const HomoPoly2& p);

// (2^(n/2)/|C|) * sigma_transform(p). For a valid weight enumerator this
// is the weight enumerator of the dual code; non-integer output
// coefficients are rejected as evidence of invalid input.
HomoPoly2 macwilliams_dual(const HomoPoly2& p, const BigInt& code_size);

// Sign in the degree-corrected transform identity for harmonic weight
// enumerators, frozen by the span{10} oracle (see the regression test).
inline constexpr int kHarmonicTransformSign = -1;

struct BachocReport {
  bool pass = false;
  bool divisible = false;  // (xy)^deg P divides both enumerators
  int form_degree = 0;
  HomoPoly2 lhs;  // sigma_transform(Z_{C,P})
  HomoPoly2 rhs;  // sign^d * (2^(n/2)/|C^perp|) * Z_{C^perp,P}
};

// Verifies the Z-normalized transform identity between W_{C,P} and
// W_{C^perp,P}; degree 0 coincides with macwilliams_dual.
BachocReport bachoc_z_check(const Code& c, const HarmonicLinForm& p);

// Type II, n < 30: hwe(C, P_i) must vanish identically for i = 1..n.
bool vanishing_check(const Code& c);

struct DesignReport {
  bool pass = false;
  Rat lambda;               // w*|C_w|/n, the only possible block count
  int failing_coordinate = 0;  // 1-based; 0 when the check passes
};

// Checks that the weight-w words cover every coordinate equally often.
DesignReport design_check(const Code& c, int w);

// counts[w][i]: how many weight-w codewords have coordinate i+1 set.
std::vector<std::vector<std::int64_t>> coordinate_weight_profile(const Code& c);

}  // namespace koch24
