#include "koch24/tetrad.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace koch24 {

TetradLabel d_label(int k) {
  if (k < 2) throw std::invalid_argument("d_{2k} requires k >= 2");
  return TetradLabel{TetradFamily::D, 2 * k};
}

int label_dim(const TetradLabel& l) {
  if (l.family == TetradFamily::D) return l.length / 2 - 1;
  return l.length == 7 ? 3 : 4;
}

std::int64_t label_t4(const TetradLabel& l) {
  if (l.family == TetradFamily::D) {
    const std::int64_t k = l.length / 2;
    return k * (k - 1) / 2;
  }
  return l.length == 7 ? 7 : 14;
}

Rat label_eta(const TetradLabel& l) { return Rat(label_t4(l), l.length); }

int label_coverage(const TetradLabel& l) {
  if (l.family == TetradFamily::D) return l.length / 2 - 1;
  return l.length == 7 ? 4 : 7;
}

std::string to_string(const TetradLabel& l) {
  return (l.family == TetradFamily::D ? "d" : "e") + std::to_string(l.length);
}

SystemSignature::SystemSignature(const std::vector<TetradLabel>& labels) {
  for (const TetradLabel& l : labels) add(l);
}

void SystemSignature::add(const TetradLabel& l, int count) {
  if (count < 1) throw std::invalid_argument("signature multiplicity must be positive");
  terms_[l] += count;
}

int SystemSignature::total_length() const {
  int total = 0;
  for (const auto& [label, count] : terms_) total += label.length * count;
  return total;
}

Rat SystemSignature::common_eta() const {
  if (terms_.empty()) throw std::invalid_argument("empty signature has no tetrad number");
  const Rat eta = label_eta(terms_.begin()->first);
  for (const auto& [label, count] : terms_)
    if (label_eta(label) != eta)
      throw std::invalid_argument("signature components have mixed tetrad numbers");
  return eta;
}

std::string SystemSignature::str() const {
  if (terms_.empty()) return "empty";
  std::string out;
  for (const auto& [label, count] : terms_) {
    if (!out.empty()) out += "+";
    if (count > 1) out += std::to_string(count);
    out += to_string(label);
  }
  return out;
}

SystemSignature SystemSignature::parse(const std::string& text) {
  SystemSignature sig;
  if (text == "empty") return sig;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string::npos) end = text.size();
    const std::string term = text.substr(pos, end - pos);
    pos = end + 1;

    std::size_t i = 0;
    int mult = 0;
    while (i < term.size() && term[i] >= '0' && term[i] <= '9') mult = mult * 10 + (term[i++] - '0');
    if (mult == 0) mult = 1;
    if (i >= term.size() || (term[i] != 'd' && term[i] != 'e'))
      throw std::invalid_argument("bad signature term '" + term + "'");
    const char family = term[i++];
    int len = 0;
    if (i >= term.size()) throw std::invalid_argument("bad signature term '" + term + "'");
    while (i < term.size() && term[i] >= '0' && term[i] <= '9') len = len * 10 + (term[i++] - '0');
    if (i != term.size()) throw std::invalid_argument("bad signature term '" + term + "'");

    if (family == 'e') {
      if (len != 7 && len != 8) throw std::invalid_argument("bad signature term '" + term + "'");
      sig.add(TetradLabel{TetradFamily::E, len}, mult);
    } else {
      if (len < 4 || len % 2 != 0) throw std::invalid_argument("bad signature term '" + term + "'");
      sig.add(TetradLabel{TetradFamily::D, len}, mult);
    }
  }
  if (sig.empty()) throw std::invalid_argument("empty signature text");
  return sig;
}

std::vector<Word> tetrads(const Code& c) {
  std::vector<std::uint64_t> hits;
  if (c.dim() > kEnumCap)
    throw std::invalid_argument("dimension " + std::to_string(c.dim()) +
                                " exceeds the enumeration cap " + std::to_string(kEnumCap));
  for_each_codeword(c, [&](std::uint64_t w) {
    if (std::popcount(w) == 4) hits.push_back(w);
  });
  std::sort(hits.begin(), hits.end(), lex_less);
  std::vector<Word> out;
  out.reserve(hits.size());
  for (std::uint64_t w : hits) out.push_back(Word{c.n, w});
  return out;
}

Code tetrad_subcode(const Code& c) {
  std::vector<std::uint64_t> rows;
  for (const Word& t : tetrads(c)) rows.push_back(t.bits);
  return make_code(c.n, std::move(rows));
}

TetradLabel classify_component(const Code& s) {
  const int m = s.n;
  const int k = s.dim();
  TetradLabel label;
  if (m == 7 && k == 3)
    label = kE7;
  else if (m == 8 && k == 4)
    label = kE8;
  else if (m >= 4 && m % 2 == 0 && k == m / 2 - 1)
    label = d_label(m / 2);
  else
    throw std::logic_error("tetrad component of length " + std::to_string(m) + ", dimension " +
                           std::to_string(k) + " matches no irreducible tetrad code");

  // Verify the full invariant triple and the coverage regularity.
  std::int64_t t4 = 0;
  std::vector<std::int64_t> coverage(static_cast<std::size_t>(m), 0);
  for_each_codeword(s, [&](std::uint64_t w) {
    if (std::popcount(w) != 4) return;
    ++t4;
    while (w) {
      ++coverage[static_cast<std::size_t>(std::countr_zero(w))];
      w &= w - 1;
    }
  });
  if (t4 != label_t4(label))
    throw std::logic_error("component classified as " + to_string(label) + " has " +
                           std::to_string(t4) + " tetrads, expected " +
                           std::to_string(label_t4(label)));
  for (int i = 0; i < m; ++i)
    if (coverage[static_cast<std::size_t>(i)] != label_coverage(label))
      throw std::logic_error("component classified as " + to_string(label) +
                             " has irregular coordinate coverage");
  return label;
}

TetradDecomposition decompose(const Code& c) {
  const std::vector<Word> system = tetrads(c);
  TetradDecomposition out;
  out.total_t4 = static_cast<std::int64_t>(system.size());

  std::vector<int> parent(static_cast<std::size_t>(c.n));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  const auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

  std::uint64_t covered = 0;
  for (const Word& t : system) {
    covered |= t.bits;
    std::uint64_t w = t.bits;
    const int first = std::countr_zero(w);
    w &= w - 1;
    while (w) {
      unite(first, std::countr_zero(w));
      w &= w - 1;
    }
  }

  std::map<int, std::vector<int>> groups;  // root -> 0-based coordinates
  for (int i = 0; i < c.n; ++i) {
    if (covered & (std::uint64_t{1} << i))
      groups[find(i)].push_back(i);
    else
      out.uncovered.push_back(i + 1);
  }
  std::vector<std::vector<int>> supports;
  for (auto& [root, coords] : groups) supports.push_back(std::move(coords));
  std::sort(supports.begin(), supports.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  for (const std::vector<int>& coords : supports) {
    std::uint64_t mask = 0;
    for (int i : coords) mask |= std::uint64_t{1} << i;
    std::vector<int> place(static_cast<std::size_t>(c.n), -1);
    for (std::size_t j = 0; j < coords.size(); ++j) place[static_cast<std::size_t>(coords[j])] = static_cast<int>(j);

    std::vector<std::uint64_t> members;
    for (const Word& t : system) {
      if ((t.bits & mask) != t.bits) continue;
      std::uint64_t compressed = 0;
      std::uint64_t w = t.bits;
      while (w) {
        compressed |= std::uint64_t{1} << place[static_cast<std::size_t>(std::countr_zero(w))];
        w &= w - 1;
      }
      members.push_back(compressed);
    }
    const auto member_count = static_cast<std::int64_t>(members.size());
    const Code restricted = make_code(static_cast<int>(coords.size()), std::move(members));

    TetradComponent comp;
    comp.label = classify_component(restricted);
    comp.length = restricted.n;
    comp.dim = restricted.dim();
    comp.t4 = member_count;
    if (comp.t4 != label_t4(comp.label))
      throw std::logic_error("component tetrad count disagrees with its classification");
    comp.eta = Rat(comp.t4, comp.length);
    comp.support.reserve(coords.size());
    for (int i : coords) comp.support.push_back(i + 1);
    out.components.push_back(std::move(comp));
  }
  return out;
}

Rat tetrad_number(const TetradComponent& comp) { return Rat(comp.t4, comp.length); }

SystemSignature signature_of(const TetradDecomposition& d) {
  SystemSignature sig;
  for (const TetradComponent& comp : d.components) sig.add(comp.label);
  return sig;
}

namespace {
void require_type2_length24(const Code& c) {
  if (c.n != 24)
    throw std::invalid_argument("length is " + std::to_string(c.n) + ", want 24");
  switch (classify_self_duality(c)) {
    case DualityClass::TypeII: return;
    case DualityClass::TypeI:
      throw std::invalid_argument("not Type II: self-dual but not doubly even");
    default:
      throw std::invalid_argument("not Type II: not self-dual");
  }
}
}  // namespace

PropReport prop_check(const Code& c) {
  require_type2_length24(c);
  const TetradDecomposition d = decompose(c);
  PropReport rep;
  rep.c4 = d.total_t4;
  rep.components = d.components;
  if (d.total_t4 == 0) {
    rep.pass = true;
    rep.empty_system = true;
    rep.eta_expected = 0;
    return rep;
  }
  rep.eta_expected = Rat(d.total_t4, 24);
  if (!d.uncovered.empty()) {
    rep.pass = false;
    rep.failure = "coordinate " + std::to_string(d.uncovered.front()) + " is covered by no tetrad";
    return rep;
  }
  for (const TetradComponent& comp : d.components) {
    if (comp.eta != rep.eta_expected) {
      rep.pass = false;
      rep.failure = "component " + to_string(comp.label) + " has tetrad number " +
                    rat_str(comp.eta) + ", expected " + rat_str(rep.eta_expected);
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

const std::vector<SystemSignature>& koch_allowed_signatures() {
  static const std::vector<SystemSignature> allowed = [] {
    std::vector<SystemSignature> v;
    for (const char* s :
         {"empty", "6d4", "4d6", "3d8", "2d12", "d24", "2e7+d10", "3e8", "e8+d16"})
      v.push_back(SystemSignature::parse(s));
    return v;
  }();
  return allowed;
}

KochVerdict koch_check(const Code& c) {
  require_type2_length24(c);
  KochVerdict v;
  v.signature = signature_of(decompose(c));
  const auto& allowed = koch_allowed_signatures();
  v.pass = std::find(allowed.begin(), allowed.end(), v.signature) != allowed.end();
  return v;
}

std::vector<SystemSignature> admissible_systems(int n) {
  if (n < 1 || n > kMaxLength) throw std::invalid_argument("length outside 1..64");

  std::set<Rat> etas;
  for (int k = 2; 2 * k <= n; ++k) etas.insert(Rat(k - 1, 4));
  etas.insert(Rat(1));
  etas.insert(Rat(7, 4));

  std::set<SystemSignature> found;
  for (const Rat& eta : etas) {
    std::vector<TetradLabel> labels;
    const Rat kr = eta * 4 + 1;
    if (boost::multiprecision::denominator(kr) == 1) {
      const auto k = static_cast<int>(boost::multiprecision::numerator(kr));
      if (k >= 2 && 2 * k <= n) labels.push_back(d_label(k));
    }
    if (eta == 1 && n >= 7) labels.push_back(kE7);
    if (eta == Rat(7, 4) && n >= 8) labels.push_back(kE8);
    if (labels.empty()) continue;

    // Exhaust multiplicities solving sum(count * length) = n.
    std::vector<int> counts(labels.size(), 0);
    const auto emit = [&]() {
      SystemSignature sig;
      bool any = false;
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (counts[i] > 0) {
          sig.add(labels[i], counts[i]);
          any = true;
        }
      if (any) found.insert(sig);
    };
    const auto solve = [&](auto&& self, std::size_t idx, int remaining) -> void {
      if (idx == labels.size()) {
        if (remaining == 0) emit();
        return;
      }
      for (int cnt = 0; cnt * labels[idx].length <= remaining; ++cnt) {
        counts[idx] = cnt;
        self(self, idx + 1, remaining - cnt * labels[idx].length);
      }
      counts[idx] = 0;
    };
    solve(solve, 0, n);
  }

  std::vector<SystemSignature> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const SystemSignature& a, const SystemSignature& b) {
    const Rat ea = a.common_eta(), eb = b.common_eta();
    if (ea != eb) return ea < eb;
    return a.str() < b.str();
  });
  return out;
}

}  // namespace koch24
