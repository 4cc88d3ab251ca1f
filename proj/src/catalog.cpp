#include "koch24/catalog.hpp"

#include "koch24/enumerators.hpp"
#include "koch24/tetrad.hpp"
#include "koch24/textio.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace koch24 {

namespace {

// e7: the [7,3,4] simplex realization (all nonzero words have weight 4).
constexpr const char* kE7Rows[] = {"1010101", "0110011", "0001111"};

// e8: first-order Reed-Muller of length 8 = the [8,4,4] extended Hamming.
constexpr const char* kE8Rows[] = {"11111111", "01010101", "00110011", "00001111"};

// Extended Golay in systematic (I|B) form; verified at build time to be
// [24,12,8], Type II, with no weight-4 words.
constexpr const char* kG24Rows[] = {
    "100000000000110001110101", "010000000000011000111011", "001000000000111101101000",
    "000100000000011110110100", "000010000000001111011010", "000001000000110110011001",
    "000000100000011011001101", "000000010000001101100111", "000000001000110111000110",
    "000000000100101010010111", "000000000010100100111110", "000000000001100011101011"};

Code code_from_literal(const char* const* rows, std::size_t count) {
  std::vector<std::uint64_t> bits;
  const int n = static_cast<int>(std::string(rows[0]).size());
  for (std::size_t i = 0; i < count; ++i) bits.push_back(parse_word(rows[i]));
  return make_code(n, std::move(bits));
}

// d_{2k}: pairs (2j-1, 2j) carry equal bits and the pair pattern has even
// weight; spanned by the k-1 sliding blocks 1111 at even offsets.
Code build_d(int k) {
  if (k < 2 || 2 * k > kMaxLength)
    throw std::invalid_argument("d family requires 4 <= length <= 64");
  std::vector<std::uint64_t> rows;
  for (int j = 0; j < k - 1; ++j) rows.push_back(std::uint64_t{0xF} << (2 * j));
  return make_code(2 * k, std::move(rows));
}

Code component_code(const TetradLabel& l) {
  if (l.family == TetradFamily::E)
    return l.length == 7 ? code_from_literal(kE7Rows, 3) : code_from_literal(kE8Rows, 4);
  return build_d(l.length / 2);
}

Code signature_direct_sum(const SystemSignature& sig) {
  std::vector<Code> parts;
  for (const auto& [label, count] : sig.terms())
    for (int i = 0; i < count; ++i) parts.push_back(component_code(label));
  return direct_sum(parts);
}

void verify_contract(const Code& c, int n, int k, int d, DualityClass type) {
  if (c.n != n || c.dim() != k || classify_self_duality(c) != type || min_distance(c) != d)
    throw std::logic_error("catalog construction violates its contract");
}

Code build_glued(int n, const std::string& sig_text) {
  const SystemSignature sig = SystemSignature::parse(sig_text);
  if (sig.total_length() != n)
    throw std::invalid_argument("signature " + sig.str() + " does not fill length " +
                                std::to_string(n));
  const Code seed = signature_direct_sum(sig);
  std::optional<Code> c = complete_to_type2(seed, n);
  if (!c)
    throw std::invalid_argument("signature " + sig.str() +
                                " admits no Type II completion without new tetrads");
  if (!(signature_of(decompose(*c)) == sig))
    throw std::logic_error("glued code has the wrong tetrad system");
  return *c;
}

std::vector<std::int64_t> sorted_weights(const Code& c) {
  const WeightDistribution d = weight_distribution(c);
  return d.counts;
}

}  // namespace

Code build(const std::string& name) {
  if (name == "e7") {
    Code c = code_from_literal(kE7Rows, 3);
    verify_contract(c, 7, 3, 4, DualityClass::SelfOrthogonal);
    return c;
  }
  if (name == "e8") {
    Code c = code_from_literal(kE8Rows, 4);
    verify_contract(c, 8, 4, 4, DualityClass::TypeII);
    return c;
  }
  if (name == "g24") {
    Code c = code_from_literal(kG24Rows, 12);
    verify_contract(c, 24, 12, 8, DualityClass::TypeII);
    return c;
  }
  if (name.size() > 1 && name[0] == 'd') {
    int len = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') throw std::invalid_argument("unknown catalog name: " + name);
      len = len * 10 + (name[i] - '0');
    }
    if (len < 4 || len % 2 != 0) throw std::invalid_argument("unknown catalog name: " + name);
    Code c = build_d(len / 2);
    if (c.dim() != len / 2 - 1 || static_cast<std::int64_t>(tetrads(c).size()) != label_t4(d_label(len / 2)))
      throw std::logic_error("catalog construction violates its contract");
    return c;
  }
  const auto glued = [&](int n, const std::string& prefix) -> std::optional<Code> {
    if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
        name[prefix.size()] == '(' && name.back() == ')')
      return build_glued(n, name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    return std::nullopt;
  };
  if (auto c = glued(16, "t16")) return *c;
  if (auto c = glued(24, "t24")) return *c;
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int len = 4; len <= kMaxLength; len += 2) names.push_back("d" + std::to_string(len));
  names.push_back("e7");
  names.push_back("e8");
  names.push_back("g24");
  names.push_back("t16(2e8)");
  names.push_back("t16(d16)");
  for (const SystemSignature& sig : admissible_systems(24)) names.push_back("t24(" + sig.str() + ")");
  return names;
}

std::optional<Code> complete_to_type2(const Code& seed, int n) {
  if (seed.n != n) throw std::invalid_argument("seed length does not match n");
  if (n % 8 != 0) throw std::invalid_argument("Type II codes require length divisible by 8");
  if (!is_doubly_even(seed))
    throw std::invalid_argument("seed must be doubly even and self-orthogonal");
  if (seed.dim() > n / 2) throw std::invalid_argument("seed dimension exceeds n/2");

  if (seed.dim() == n / 2) return seed;

  const Code perp = dual(seed);
  if (perp.dim() > 20)
    throw std::invalid_argument("glue search space 2^" + std::to_string(perp.dim()) +
                                " too large");

  // Candidate glue words: doubly even words of the seed's dual, in
  // lexicographic order.
  std::vector<std::uint64_t> candidates;
  for_each_codeword(perp, [&](std::uint64_t w) {
    if (w != 0 && std::popcount(w) % 4 == 0) candidates.push_back(w);
  });
  std::sort(candidates.begin(), candidates.end(), lex_less);

  std::vector<std::uint64_t> current = codewords(seed);
  std::unordered_set<std::uint64_t> member(current.begin(), current.end());
  std::vector<std::uint64_t> chosen;
  const std::size_t need = static_cast<std::size_t>(n / 2 - seed.dim());

  const auto backtrack = [&](auto&& self) -> bool {
    if (chosen.size() == need) return true;
    for (std::uint64_t v : candidates) {
      if (member.contains(v)) continue;
      bool orthogonal = true;
      for (std::uint64_t u : chosen)
        if (std::popcount(u & v) & 1) {
          orthogonal = false;
          break;
        }
      if (!orthogonal) continue;
      bool adds_tetrad = false;
      for (std::uint64_t w : current)
        if (std::popcount(v ^ w) == 4) {
          adds_tetrad = true;
          break;
        }
      if (adds_tetrad) continue;

      const std::size_t mark = current.size();
      chosen.push_back(v);
      for (std::size_t i = 0; i < mark; ++i) {
        const std::uint64_t nw = current[i] ^ v;
        current.push_back(nw);
        member.insert(nw);
      }
      if (self(self)) return true;
      for (std::size_t i = mark; i < current.size(); ++i) member.erase(current[i]);
      current.resize(mark);
      chosen.pop_back();
    }
    return false;
  };
  if (!backtrack(backtrack)) return std::nullopt;

  std::vector<std::uint64_t> rows = seed.rows;
  rows.insert(rows.end(), chosen.begin(), chosen.end());
  Code out = make_code(n, std::move(rows));

  // Re-verify everything the search promised.
  for (std::uint64_t r : seed.rows)
    if (!contains(out, r)) throw std::logic_error("completion lost the seed");
  if (classify_self_duality(out) != DualityClass::TypeII)
    throw std::logic_error("completion is not Type II");
  if (!(tetrads(out) == tetrads(seed))) throw std::logic_error("completion changed the tetrad system");
  return out;
}

std::vector<Code> search_type2(int n) {
  if (n < 1 || n > 14) throw std::invalid_argument("census search supports 1 <= n <= 14");
  if (n % 2 != 0) return {};  // self-dual needs dimension n/2

  const std::uint64_t ones = coord_mask(n);
  // The all-ones word lies in every self-dual code; a Type II code needs
  // its weight, n, divisible by 4.
  if (n % 4 != 0) return {};

  std::set<std::vector<std::uint64_t>> level;
  level.insert(make_code(n, {ones}).rows);
  for (int dim = 1; dim < n / 2; ++dim) {
    std::set<std::vector<std::uint64_t>> next;
    for (const std::vector<std::uint64_t>& rows : level) {
      Code c = make_code(n, rows);
      const std::vector<std::uint64_t> perp_words = codewords(dual(c));
      for (std::uint64_t v : perp_words) {
        if (std::popcount(v) % 4 != 0) continue;
        if (contains(c, v)) continue;
        std::vector<std::uint64_t> extended = rows;
        extended.push_back(v);
        next.insert(make_code(n, std::move(extended)).rows);
      }
    }
    level = std::move(next);
    if (level.empty()) break;
  }
  std::vector<Code> out;
  out.reserve(level.size());
  for (const std::vector<std::uint64_t>& rows : level) out.push_back(make_code(n, rows));
  return out;
}

bool CensusReport::mass_identity_holds() const {
  if (n == 0) return count == 1;  // degenerate convention, no classes
  if (count == 0) return classes.empty();
  std::int64_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  std::int64_t mass = 0;
  for (const CensusClass& cl : classes) {
    if (cl.aut_order == 0 || factorial % cl.aut_order != 0) return false;
    mass += factorial / cl.aut_order;
  }
  return mass == count;
}

CensusReport enumerate_type2(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("census cap is n <= 8");
  CensusReport rep;
  rep.n = n;
  if (n == 0) {  // the empty code, by convention
    rep.count = 1;
    return rep;
  }
  rep.codes = search_type2(n);
  rep.count = static_cast<std::int64_t>(rep.codes.size());
  for (const Code& c : rep.codes) {
    bool placed = false;
    for (CensusClass& cl : rep.classes)
      if (equivalent(cl.representative, c)) {
        ++cl.size;
        placed = true;
        break;
      }
    if (!placed) {
      CensusClass cl;
      cl.representative = c;
      cl.size = 1;
      cl.aut_order = aut_order(c);
      rep.classes.push_back(std::move(cl));
    }
  }
  return rep;
}

BigInt count_type2_formula(int n) {
  if (n < 8 || n > 40 || n % 8 != 0)
    throw std::invalid_argument("formula supports n = 8, 16, ..., 40");
  BigInt product = 1;
  for (int i = 0; i <= n / 2 - 2; ++i) product *= (BigInt(1) << i) + 1;
  return product;
}

namespace {
void require_perm_scale(const Code& c) {
  if (c.n > 10)
    throw std::invalid_argument("permutation brute force capped at n <= 10");
}
}  // namespace

std::int64_t aut_order(const Code& c) {
  require_perm_scale(c);
  std::vector<int> perm(static_cast<std::size_t>(c.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    if (apply_permutation(c, perm) == c) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

bool equivalent(const Code& a, const Code& b) {
  if (a.n != b.n || a.dim() != b.dim()) return false;
  require_perm_scale(a);
  if (sorted_weights(a) != sorted_weights(b)) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (apply_permutation(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace koch24
