#include "koch24/enumerators.hpp"

#include <algorithm>
#include <stdexcept>

namespace koch24 {

std::string qsqrt2_str(const QSqrt2& q) {
  if (q.b == 0) return rat_str(q.a);
  if (q.a == 0) return rat_str(q.b) + "*sqrt2";
  return rat_str(q.a) + " + " + rat_str(q.b) + "*sqrt2";
}

bool HomoPoly2::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(), [](const QSqrt2& q) { return q.is_zero(); });
}

HomoPoly2 zero_poly(int degree) {
  if (degree < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
  HomoPoly2 p;
  p.degree = degree;
  p.coeff.assign(static_cast<std::size_t>(degree) + 1, QSqrt2{});
  return p;
}

HarmonicLinForm constant_form(int n, Rat value) {
  if (n < 1 || n > kMaxLength) throw std::invalid_argument("form length outside 1..64");
  return HarmonicLinForm{n, 0, {std::move(value)}};
}

HarmonicLinForm linear_form(int n, std::vector<Rat> coeffs) {
  if (n < 1 || n > kMaxLength) throw std::invalid_argument("form length outside 1..64");
  if (static_cast<int>(coeffs.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  Rat sum = 0;
  for (const Rat& a : coeffs) sum += a;
  if (sum != 0)
    throw std::invalid_argument("degree-1 harmonic form requires zero coefficient sum, got " +
                                rat_str(sum));
  return HarmonicLinForm{n, 1, std::move(coeffs)};
}

HarmonicLinForm unit_form(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("unit form index outside 1..n");
  std::vector<Rat> a(static_cast<std::size_t>(n), Rat(-1));
  a[static_cast<std::size_t>(i - 1)] += n;
  return linear_form(n, std::move(a));
}

namespace {
void require_enumerable(const Code& c) {
  if (c.dim() > kEnumCap)
    throw std::invalid_argument("dimension " + std::to_string(c.dim()) +
                                " exceeds the enumeration cap " + std::to_string(kEnumCap));
}
}  // namespace

WeightDistribution weight_distribution(const Code& c) {
  require_enumerable(c);
  WeightDistribution d;
  d.n = c.n;
  d.counts.assign(static_cast<std::size_t>(c.n) + 1, 0);
  for_each_codeword(c, [&](std::uint64_t w) { ++d.counts[static_cast<std::size_t>(std::popcount(w))]; });
  return d;
}

std::vector<std::vector<std::int64_t>> coordinate_weight_profile(const Code& c) {
  require_enumerable(c);
  std::vector<std::vector<std::int64_t>> counts(
      static_cast<std::size_t>(c.n) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(c.n), 0));
  for_each_codeword(c, [&](std::uint64_t w) {
    auto& row = counts[static_cast<std::size_t>(std::popcount(w))];
    while (w) {
      ++row[static_cast<std::size_t>(std::countr_zero(w))];
      w &= w - 1;
    }
  });
  return counts;
}

HomoPoly2 hwe(const Code& c, const HarmonicLinForm& p) {
  if (p.n != c.n)
    throw std::invalid_argument("form length " + std::to_string(p.n) +
                                " does not match code length " + std::to_string(c.n));
  require_enumerable(c);
  HomoPoly2 out = zero_poly(c.n);
  if (p.degree == 0) {
    const WeightDistribution d = weight_distribution(c);
    for (int w = 0; w <= c.n; ++w)
      out.coeff[static_cast<std::size_t>(w)].a = p.coeffs[0] * d.counts[static_cast<std::size_t>(w)];
    return out;
  }
  // sum_{c in C_w} P(c) = sum_i a_i * #{c in C_w : c_i = 1}
  const auto profile = coordinate_weight_profile(c);
  for (int w = 0; w <= c.n; ++w) {
    Rat acc = 0;
    for (int i = 0; i < c.n; ++i)
      if (profile[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)] != 0)
        acc += p.coeffs[static_cast<std::size_t>(i)] *
               profile[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)];
    out.coeff[static_cast<std::size_t>(w)].a = acc;
  }
  return out;
}

HomoPoly2 sigma_transform(const HomoPoly2& p) {
  const int D = p.degree;
  // Binomial table up to D.
  std::vector<std::vector<BigInt>> binom(static_cast<std::size_t>(D) + 1);
  for (int i = 0; i <= D; ++i) {
    binom[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  // a_w x^(D-w) y^w  ->  a_w (x+y)^(D-w) (x-y)^w / sqrt2^D
  HomoPoly2 out = zero_poly(D);
  for (int w = 0; w <= D; ++w) {
    const QSqrt2& a = p.coeff[static_cast<std::size_t>(w)];
    if (a.is_zero()) continue;
    for (int j = 0; j <= D; ++j) {
      BigInt k = 0;
      const int lo = std::max(0, j - (D - w));
      const int hi = std::min(w, j);
      for (int i = lo; i <= hi; ++i) {
        const BigInt term = binom[static_cast<std::size_t>(D - w)][static_cast<std::size_t>(j - i)] *
                            binom[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)];
        if (i & 1)
          k -= term;
        else
          k += term;
      }
      if (k != 0) out.coeff[static_cast<std::size_t>(j)] = out.coeff[static_cast<std::size_t>(j)] + a * Rat(k);
    }
  }
  const QSqrt2 scale = (D % 2 == 0)
                           ? QSqrt2{Rat(1) / Rat(BigInt(1) << (D / 2)), Rat(0)}
                           : QSqrt2{Rat(0), Rat(1) / Rat(BigInt(1) << ((D + 1) / 2))};
  for (QSqrt2& q : out.coeff) q = q * scale;
  return out;
}

HomoPoly2 macwilliams_dual(const HomoPoly2& p, const BigInt& code_size) {
  if (code_size <= 0) throw std::invalid_argument("code size must be positive");
  const int n = p.degree;
  const QSqrt2 scale = (n % 2 == 0)
                           ? QSqrt2{Rat(BigInt(1) << (n / 2)) / Rat(code_size), Rat(0)}
                           : QSqrt2{Rat(0), Rat(BigInt(1) << ((n - 1) / 2)) / Rat(code_size)};
  HomoPoly2 out = sigma_transform(p);
  for (QSqrt2& q : out.coeff) {
    q = q * scale;
    if (q.b != 0 || boost::multiprecision::denominator(q.a) != 1)
      throw std::invalid_argument(
          "transform produced non-integer coefficients; input is not the weight "
          "enumerator of a code of the given size");
  }
  return out;
}

BachocReport bachoc_z_check(const Code& c, const HarmonicLinForm& p) {
  const int d = p.degree;
  const int n = c.n;
  const HomoPoly2 w_primal = hwe(c, p);
  const Code cd = dual(c);
  const HomoPoly2 w_dual = hwe(cd, p);

  BachocReport rep;
  rep.form_degree = d;
  const auto divisible_by_xy_pow = [&](const HomoPoly2& poly) {
    for (int w = 0; w < d; ++w)
      if (!poly.coeff[static_cast<std::size_t>(w)].is_zero() ||
          !poly.coeff[static_cast<std::size_t>(n - w)].is_zero())
        return false;
    return true;
  };
  rep.divisible = divisible_by_xy_pow(w_primal) && divisible_by_xy_pow(w_dual);
  if (!rep.divisible) {
    rep.pass = false;
    return rep;
  }

  const auto strip = [&](const HomoPoly2& poly) {
    HomoPoly2 z = zero_poly(n - 2 * d);
    for (int w = 0; w <= n - 2 * d; ++w)
      z.coeff[static_cast<std::size_t>(w)] = poly.coeff[static_cast<std::size_t>(w + d)];
    return z;
  };
  const HomoPoly2 z_primal = strip(w_primal);
  const HomoPoly2 z_dual = strip(w_dual);

  rep.lhs = sigma_transform(z_primal);
  const BigInt dual_size = BigInt(1) << cd.dim();
  QSqrt2 scale = (n % 2 == 0) ? QSqrt2{Rat(BigInt(1) << (n / 2)) / Rat(dual_size), Rat(0)}
                              : QSqrt2{Rat(0), Rat(BigInt(1) << ((n - 1) / 2)) / Rat(dual_size)};
  if (d % 2 == 1 && kHarmonicTransformSign < 0) scale = -scale;
  rep.rhs = z_dual;
  for (QSqrt2& q : rep.rhs.coeff) q = q * scale;
  rep.pass = (rep.lhs == rep.rhs);
  return rep;
}

bool vanishing_check(const Code& c) {
  if (classify_self_duality(c) != DualityClass::TypeII)
    throw std::invalid_argument("vanishing check requires a Type II code");
  if (c.n >= 30) throw std::invalid_argument("vanishing check requires length < 30");
  const HomoPoly2 zero = zero_poly(c.n);
  for (int i = 1; i <= c.n; ++i)
    if (!(hwe(c, unit_form(c.n, i)) == zero)) return false;
  return true;
}

DesignReport design_check(const Code& c, int w) {
  if (w < 0 || w > c.n) throw std::invalid_argument("weight outside 0..n");
  require_enumerable(c);
  const auto profile = coordinate_weight_profile(c);
  const auto& row = profile[static_cast<std::size_t>(w)];
  const std::int64_t block_count = weight_distribution(c).counts[static_cast<std::size_t>(w)];
  DesignReport rep;
  rep.lambda = Rat(static_cast<std::int64_t>(w) * block_count, c.n);
  for (int i = 0; i < c.n; ++i) {
    if (Rat(row[static_cast<std::size_t>(i)]) != rep.lambda) {
      rep.pass = false;
      rep.failing_coordinate = i + 1;
      return rep;
    }
  }
  rep.pass = true;
  rep.failing_coordinate = 0;
  return rep;
}

}  // namespace koch24
