#include "ircl/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace ircl {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotResiduated: return "NotResiduated";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::UnitFailure: return "UnitFailure";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::NotConic: return "NotConic";
    case Errc::NotAChain: return "NotAChain";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NotStarInvolutive: return "NotStarInvolutive";
    case Errc::NotRigid: return "NotRigid";
    case Errc::NotConjunctive: return "NotConjunctive";
    case Errc::NotCommutative: return "NotCommutative";
    case Errc::NotReduced: return "NotReduced";
    case Errc::NotSemiconicIdempotent: return "NotSemiconicIdempotent";
    case Errc::InvalidEMP: return "InvalidEMP";
    case Errc::InvalidIGC: return "InvalidIGC";
    case Errc::InvalidSystem: return "InvalidSystem";
    case Errc::SideConditionViolated: return "SideConditionViolated";
    case Errc::NucleusViolation: return "NucleusViolation";
    case Errc::NotConfigured: return "NotConfigured";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::CepFailure: return "CepFailure";
    case Errc::UnknownName: return "UnknownName";
    case Errc::UnknownFigure: return "UnknownFigure";
    case Errc::BadInput: return "BadInput";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

void fail(Errc code, const std::string& detail) {
  throw Error(code, std::string(errc_name(code)) + ": " + detail);
}

std::string Report::to_string() const {
  std::string out;
  for (const auto& it : items) {
    out += it.pass ? "pass  " : "FAIL  ";
    out += it.check;
    if (!it.detail.empty()) {
      out += " -- ";
      out += it.detail;
    }
    out += '\n';
  }
  return out;
}

Poset Poset::antichain(int n) {
  Poset p;
  p.n = n;
  p.up.resize(n);
  for (int i = 0; i < n; ++i) p.up[i] = 1ull << i;
  return p;
}

Poset Poset::from_leq(int n, const std::vector<std::uint8_t>& leq) {
  Poset p;
  p.n = n;
  p.up.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i * n + j]) p.up[i] |= 1ull << j;
  for (int i = 0; i < n; ++i) {
    if (!p.leq(i, i)) fail(Errc::BadInput, "order not reflexive at " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      if (i != j && p.leq(i, j) && p.leq(j, i))
        fail(Errc::BadInput, "order not antisymmetric on (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (p.leq(i, j) && (p.up[j] & ~p.up[i]))
        fail(Errc::BadInput, "order not transitive at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return p;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  Poset p;
  p.n = n;
  p.up.assign(n, 0);
  for (int i = 0; i < n; ++i) p.up[i] = 1ull << i;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n || lo == hi)
      fail(Errc::BadInput, "bad cover pair");
    p.up[lo] |= 1ull << hi;
  }
  // Warshall-style closure over bit rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq(i, k)) p.up[i] |= p.up[k];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i))
        fail(Errc::BadInput, "covers contain a cycle through " + std::to_string(i));
  return p;
}

std::uint64_t Poset::down_mask(int j) const {
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i)
    if (leq(i, j)) m |= 1ull << i;
  return m;
}

static std::optional<int> unique_max(const Poset& p, std::uint64_t set) {
  if (!set) return std::nullopt;
  // The maximum must dominate every member of the set.
  for (std::uint64_t s = set; s;) {
    int i = std::countr_zero(s);
    s &= s - 1;
    bool best = true;
    for (std::uint64_t t = set; t;) {
      int j = std::countr_zero(t);
      t &= t - 1;
      if (!p.leq(j, i)) {
        best = false;
        break;
      }
    }
    if (best) return i;
  }
  return std::nullopt;
}

std::optional<int> Poset::meet(int i, int j) const {
  std::uint64_t lowers = down_mask(i) & down_mask(j);
  return unique_max(*this, lowers);
}

std::optional<int> Poset::join(int i, int j) const {
  std::uint64_t uppers = up[i] & up[j];
  if (!uppers) return std::nullopt;
  for (std::uint64_t s = uppers; s;) {
    int k = std::countr_zero(s);
    s &= s - 1;
    bool least = true;
    for (std::uint64_t t = uppers; t;) {
      int m = std::countr_zero(t);
      t &= t - 1;
      if (!leq(k, m)) {
        least = false;
        break;
      }
    }
    if (least) return k;
  }
  return std::nullopt;
}

std::optional<int> Poset::top() const {
  for (int i = 0; i < n; ++i)
    if (down_mask(i) == all_mask()) return i;
  return std::nullopt;
}

std::optional<int> Poset::bottom() const {
  for (int i = 0; i < n; ++i)
    if (up[i] == all_mask()) return i;
  return std::nullopt;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!lt(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k)
        if (k != i && k != j && lt(i, k) && lt(k, j)) covered = false;
      if (covered) cov.emplace_back(i, j);
    }
  return cov;
}

bool Poset::is_chain() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

bool Poset::is_lattice() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!meet(i, j) || !join(i, j)) return false;
  return n > 0;
}

bool Poset::is_prelattice() const {
  if (!top()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!join(i, j)) return false;
      if ((down_mask(i) & down_mask(j)) && !meet(i, j)) return false;
    }
  return true;
}

bool Poset::is_distributive_lattice() const {
  if (!is_lattice()) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int yz = *join(y, z);
        int lhs = *meet(x, yz);
        int rhs = *join(*meet(x, y), *meet(x, z));
        if (lhs != rhs) return false;
      }
  return true;
}

std::optional<int> Poset::rel_pseudocomplement(int i, int j) const {
  std::uint64_t good = 0;
  for (int z = 0; z < n; ++z) {
    auto m = meet(z, i);
    if (m && leq(*m, j)) good |= 1ull << z;
  }
  return unique_max(*this, good);
}

bool Poset::is_brouwerian() const {
  if (!is_lattice()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!rel_pseudocomplement(i, j)) return false;
  return true;
}

Poset Poset::restrict_to(const std::vector<int>& elems) const {
  Poset q;
  q.n = static_cast<int>(elems.size());
  q.up.assign(q.n, 0);
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b)
      if (leq(elems[a], elems[b])) q.up[a] |= 1ull << b;
  return q;
}

std::vector<std::uint8_t> Poset::canonical_code() const {
  // Iterated neighbourhood refinement first; permutations only within cells
  // of equal invariant, which collapses the factorial for all but the most
  // symmetric posets.
  std::vector<std::uint64_t> inv(n);
  for (int i = 0; i < n; ++i)
    inv[i] = (static_cast<std::uint64_t>(std::popcount(up[i])) << 8) |
             static_cast<std::uint64_t>(std::popcount(down_mask(i)));
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> ups, downs;
      for (int j = 0; j < n; ++j) {
        if (lt(i, j)) ups.push_back(inv[j]);
        if (lt(j, i)) downs.push_back(inv[j]);
      }
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      std::uint64_t h = inv[i] * 1099511628211ull + 14695981039346656037ull;
      for (auto v : ups) h = (h ^ v) * 1099511628211ull;
      h = (h ^ 0x9e3779b97f4a7c15ull) * 1099511628211ull;
      for (auto v : downs) h = (h ^ v) * 1099511628211ull;
      next[i] = h;
    }
    if (next == inv) break;
    inv = std::move(next);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return inv[a] != inv[b] ? inv[a] < inv[b] : a < b;
  });
  // cell boundaries
  std::vector<int> cell_end;
  for (int i = 0; i < n; ++i)
    if (i + 1 == n || inv[order[i]] != inv[order[i + 1]]) cell_end.push_back(i + 1);
  std::vector<std::uint8_t> best;
  std::vector<int> pos(n);
  auto consider = [&]() {
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::uint8_t> cur(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cur[pos[i] * n + pos[j]] = leq(i, j) ? 1 : 0;
    if (best.empty() || cur < best) best = std::move(cur);
  };
  // iterate per-cell permutations
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cell_end.size()) {
      consider();
      return;
    }
    int lo = cell == 0 ? 0 : cell_end[cell - 1];
    int hi = cell_end[cell];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(rec, 0);
  best.insert(best.begin(), static_cast<std::uint8_t>(n));
  return best;
}

Poset dedekind_macneille(const Poset& p, std::vector<int>& embed) {
  // Cuts are the Galois-closed down-sets: lower(upper(S)) = S.
  auto upper = [&](std::uint64_t set) {
    std::uint64_t u = p.all_mask();
    for (std::uint64_t s = set; s;) {
      int i = std::countr_zero(s);
      s &= s - 1;
      u &= p.up[i];
    }
    return u;
  };
  auto lower = [&](std::uint64_t set) {
    std::uint64_t l = p.all_mask();
    for (std::uint64_t s = set; s;) {
      int i = std::countr_zero(s);
      s &= s - 1;
      l &= p.down_mask(i);
    }
    return l;
  };
  std::vector<std::uint64_t> cuts;
  // Closures of arbitrary sets are generated by closing unions of principal
  // down-sets; iterate to a fixpoint starting from all principal cuts plus
  // the empty cut.
  std::vector<std::uint64_t> work;
  work.push_back(lower(upper(0)));
  for (int i = 0; i < p.n; ++i) work.push_back(p.down_mask(i));
  auto add = [&](std::uint64_t c) {
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) {
      cuts.push_back(c);
      return true;
    }
    return false;
  };
  for (auto c : work) add(c);
  bool changed = true;
  while (changed) {
    changed = false;
    auto snapshot = cuts;
    for (auto a : snapshot)
      for (auto b : snapshot)
        if (add(lower(upper(a | b)))) changed = true;
  }
  std::sort(cuts.begin(), cuts.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return a < b;
  });
  Poset q;
  q.n = static_cast<int>(cuts.size());
  if (q.n > 64) fail(Errc::BoundExceeded, "completion exceeds 64 elements");
  q.up.assign(q.n, 0);
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b)
      if ((cuts[a] & ~cuts[b]) == 0) q.up[a] |= 1ull << b;
  embed.assign(p.n, -1);
  for (int i = 0; i < p.n; ++i) {
    auto it = std::find(cuts.begin(), cuts.end(), p.down_mask(i));
    if (it == cuts.end()) fail(Errc::Internal, "principal cut lost in completion");
    embed[i] = static_cast<int>(it - cuts.begin());
  }
  return q;
}

namespace {

// Posets of size n are grown from posets of size n-1 by adding one new
// maximal element whose strict down-set is any down-closed subset.
std::vector<Poset> grow(const std::vector<Poset>& smaller) {
  std::vector<Poset> out;
  std::map<std::vector<std::uint8_t>, bool> seen;
  for (const auto& q : smaller) {
    int n = q.n + 1;
    // enumerate down-closed subsets of q
    std::vector<std::uint64_t> downs;
    for (std::uint64_t s = 0; s < (1ull << q.n); ++s) {
      bool closed = true;
      for (std::uint64_t t = s; t && closed;) {
        int i = std::countr_zero(t);
        t &= t - 1;
        if ((q.down_mask(i) & ~s) != 0) closed = false;
      }
      if (closed) downs.push_back(s);
    }
    for (auto d : downs) {
      Poset p;
      p.n = n;
      p.up.assign(n, 0);
      for (int i = 0; i < q.n; ++i) p.up[i] = q.up[i];
      p.up[n - 1] = 1ull << (n - 1);
      for (std::uint64_t t = d; t;) {
        int i = std::countr_zero(t);
        t &= t - 1;
        p.up[i] |= 1ull << (n - 1);
      }
      auto code = p.canonical_code();
      if (!seen.count(code)) {
        seen[code] = true;
        out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Poset& a, const Poset& b) {
    return a.canonical_code() < b.canonical_code();
  });
  return out;
}

}  // namespace

const std::vector<Poset>& all_posets(int n) {
  static std::vector<std::vector<Poset>> cache;  // cache[k] = posets of size k
  if (n < 0 || n > 8) fail(Errc::BadInput, "poset catalog supports sizes 0..8");
  if (cache.empty()) {
    cache.resize(1);
    cache[0].push_back(Poset::antichain(0));
  }
  while (static_cast<int>(cache.size()) <= n) cache.push_back(grow(cache.back()));
  return cache[n];
}

const std::vector<BlockShape>& prelattice_catalog(int n) {
  static std::vector<std::vector<BlockShape>> cache(9);
  static std::vector<bool> built(9, false);
  if (n < 1 || n > 8) fail(Errc::BadInput, "prelattice catalog supports sizes 1..8");
  if (!built[n]) {
    for (const auto& p : all_posets(n)) {
      if (!p.is_prelattice()) continue;
      BlockShape b;
      b.poset = p;
      b.top = *p.top();
      b.lattice = p.is_lattice();
      b.distributive = b.lattice && p.is_distributive_lattice();
      cache[n].push_back(std::move(b));
    }
    built[n] = true;
  }
  return cache[n];
}

const std::vector<BlockShape>& distributive_catalog(int n) {
  static std::vector<std::vector<BlockShape>> cache(9);
  static std::vector<bool> built(9, false);
  if (n < 1 || n > 8) fail(Errc::BadInput, "distributive catalog supports sizes 1..8");
  if (!built[n]) {
    for (const auto& b : prelattice_catalog(n))
      if (b.distributive) cache[n].push_back(b);
    built[n] = true;
  }
  return cache[n];
}

}  // namespace ircl
