#include "ircl/finreslat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace ircl {

std::string FinResLat::tuple(std::initializer_list<int> elems) const {
  std::string s = "(";
  bool first = true;
  for (int e : elems) {
    if (!first) s += ",";
    first = false;
    s += labels_[e];
  }
  return s + ")";
}

int FinResLat::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

FinResLat FinResLat::trivial() {
  return build({"1"}, {}, {0}, 0);
}

FinResLat FinResLat::build(std::vector<std::string> labels,
                           const std::vector<std::pair<int, int>>& covers,
                           const std::vector<std::uint8_t>& mult, int unit,
                           const std::vector<std::uint8_t>* expect_ld,
                           const std::vector<std::uint8_t>* expect_rd) {
  int n = static_cast<int>(labels.size());
  return build_on_poset(std::move(labels), Poset::from_covers(n, covers), mult, unit,
                        expect_ld, expect_rd);
}

FinResLat FinResLat::build_on_poset(std::vector<std::string> labels, Poset order,
                                    const std::vector<std::uint8_t>& mult, int unit,
                                    const std::vector<std::uint8_t>* expect_ld,
                                    const std::vector<std::uint8_t>* expect_rd) {
  FinResLat a;
  a.n_ = static_cast<int>(labels.size());
  if (a.n_ < 1 || a.n_ > 64) fail(Errc::BadInput, "element count must be 1..64");
  if (order.n != a.n_) fail(Errc::BadInput, "order size mismatch");
  if (static_cast<int>(mult.size()) != a.n_ * a.n_) fail(Errc::BadInput, "mult table size mismatch");
  if (unit < 0 || unit >= a.n_) fail(Errc::BadInput, "unit index out of range");
  {
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (static_cast<int>(distinct.size()) != a.n_) fail(Errc::BadInput, "labels not distinct");
  }
  a.labels_ = std::move(labels);
  a.order_ = std::move(order);
  a.mult_ = mult;
  a.unit_ = unit;
  a.derive_and_check(expect_ld, expect_rd);
  a.compute_flags();
  return a;
}

void FinResLat::derive_and_check(const std::vector<std::uint8_t>* expect_ld,
                                 const std::vector<std::uint8_t>* expect_rd) {
  const int n = n_;
  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto m = order_.meet(i, j);
      auto u = order_.join(i, j);
      if (!m || !u)
        fail(Errc::NotALattice, "pair " + tuple({i, j}) + (m ? " has no join" : " has no meet"));
      meet_[i * n + j] = static_cast<std::uint8_t>(*m);
      join_[i * n + j] = static_cast<std::uint8_t>(*u);
    }

  for (int x = 0; x < n; ++x) {
    if (mult(unit_, x) != x || mult(x, unit_) != x)
      fail(Errc::UnitFailure, "unit fails on " + tuple({x}));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mult(mult(x, y), z) != mult(x, mult(y, z)))
          fail(Errc::NotAssociative, "witness " + tuple({x, y, z}));

  // Residuals as finite maxima. The maximum must itself satisfy the bound.
  ld_.assign(n * n, 0);
  rd_.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      int best = -1;
      for (int y = 0; y < n; ++y)
        if (leq(mult(x, y), z)) best = best < 0 ? y : join(best, y);
      if (best < 0 || !leq(mult(x, best), z))
        fail(Errc::NotResiduated, "x\\z undefined at " + tuple({x, z}));
      ld_[x * n + z] = static_cast<std::uint8_t>(best);
    }
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y) {
      int best = -1;
      for (int x = 0; x < n; ++x)
        if (leq(mult(x, y), z)) best = best < 0 ? x : join(best, x);
      if (best < 0 || !leq(mult(best, y), z))
        fail(Errc::NotResiduated, "z/y undefined at " + tuple({z, y}));
      rd_[z * n + y] = static_cast<std::uint8_t>(best);
    }
  if (expect_ld && *expect_ld != ld_) fail(Errc::NotResiduated, "supplied x\\z table disagrees with derived one");
  if (expect_rd && *expect_rd != rd_) fail(Errc::NotResiduated, "supplied z/y table disagrees with derived one");

  // Cell-by-cell adjointness; this also forces monotonicity.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        bool lhs = leq(mult(x, y), z);
        if (lhs != leq(y, ld(x, z)) || lhs != leq(x, rd(z, y)))
          fail(Errc::NotResiduated, "adjointness fails at " + tuple({x, y, z}));
      }
}

void FinResLat::compute_flags() {
  flags_.idempotent = is_idempotent(*this);
  flags_.commutative = is_commutative(*this);
  flags_.integral = is_integral(*this);
  flags_.conic = is_conic(*this);
  flags_.chain = is_chain(*this);
  flags_.distributive = is_distributive(*this);
  flags_.quasi_involutive = is_quasi_involutive(*this);
  flags_.star_involutive = is_star_involutive(*this);
  flags_.rigid = is_rigid(*this);
  flags_.conjunctive = is_conjunctive(*this);
}

int FinResLat::star_lo(int x) const { return meet(linv(x), rinv(x)); }
int FinResLat::star_hi(int x) const { return join(linv(x), rinv(x)); }
bool FinResLat::central(int x) const { return linv(x) == rinv(x); }
int FinResLat::partner(int x) const { return central(x) ? x : star_hi(x); }
int FinResLat::gamma(int x) const { return meet(linv(rinv(x)), rinv(linv(x))); }

Sign FinResLat::sign(int x) const {
  if (x == unit_) return Sign::Both;
  if (leq(x, unit_)) return Sign::Negative;
  if (leq(unit_, x)) return Sign::Positive;
  fail(Errc::NotConic, "element " + tuple({x}) + " incomparable to the unit");
}

std::pair<int, int> FinResLat::conjugates(int x, int a) const {
  int lam = meet(ld(x, mult(a, x)), unit_);
  int rho = meet(rd(mult(x, a), x), unit_);
  return {lam, rho};
}

Report verify_algebra(const FinResLat& a) {
  Report rep;
  const int n = a.size();
  rep.add("lattice order", true);  // construction guarantees it
  bool unit_ok = true, assoc_ok = true, mono_ok = true, adj_ok = true;
  std::string w;
  for (int x = 0; x < n && unit_ok; ++x)
    if (a.mult(a.unit(), x) != x || a.mult(x, a.unit()) != x) {
      unit_ok = false;
      w = a.tuple({x});
    }
  rep.add("two-sided unit", unit_ok, w);
  w.clear();
  for (int x = 0; x < n && assoc_ok; ++x)
    for (int y = 0; y < n && assoc_ok; ++y)
      for (int z = 0; z < n && assoc_ok; ++z)
        if (a.mult(a.mult(x, y), z) != a.mult(x, a.mult(y, z))) {
          assoc_ok = false;
          w = a.tuple({x, y, z});
        }
  rep.add("associativity", assoc_ok, w);
  w.clear();
  for (int x = 0; x < n && mono_ok; ++x)
    for (int y = 0; y < n && mono_ok; ++y) {
      if (!a.leq(x, y)) continue;
      for (int z = 0; z < n && mono_ok; ++z)
        if (!a.leq(a.mult(x, z), a.mult(y, z)) || !a.leq(a.mult(z, x), a.mult(z, y))) {
          mono_ok = false;
          w = a.tuple({x, y, z});
        }
    }
  rep.add("monotone product", mono_ok, w);
  w.clear();
  for (int x = 0; x < n && adj_ok; ++x)
    for (int y = 0; y < n && adj_ok; ++y)
      for (int z = 0; z < n && adj_ok; ++z) {
        bool lhs = a.leq(a.mult(x, y), z);
        if (lhs != a.leq(y, a.ld(x, z)) || lhs != a.leq(x, a.rd(z, y))) {
          adj_ok = false;
          w = a.tuple({x, y, z});
        }
      }
  rep.add("residuation adjointness", adj_ok, w);
  return rep;
}

namespace {
bool set_witness(std::string* out, std::string value) {
  if (out) *out = std::move(value);
  return false;
}
}  // namespace

bool is_idempotent(const FinResLat& a, std::string* witness) {
  for (int x = 0; x < a.size(); ++x)
    if (a.mult(x, x) != x) return set_witness(witness, a.tuple({x}));
  return true;
}

bool is_commutative(const FinResLat& a, std::string* witness) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = x + 1; y < a.size(); ++y)
      if (a.mult(x, y) != a.mult(y, x)) return set_witness(witness, a.tuple({x, y}));
  return true;
}

bool is_integral(const FinResLat& a, std::string* witness) {
  for (int x = 0; x < a.size(); ++x)
    if (!a.leq(x, a.unit())) return set_witness(witness, a.tuple({x}));
  return true;
}

bool is_conic(const FinResLat& a, std::string* witness) {
  for (int x = 0; x < a.size(); ++x)
    if (!a.leq(x, a.unit()) && !a.leq(a.unit(), x)) return set_witness(witness, a.tuple({x}));
  return true;
}

bool is_chain(const FinResLat& a, std::string* witness) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = x + 1; y < a.size(); ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) return set_witness(witness, a.tuple({x, y}));
  return true;
}

bool is_distributive(const FinResLat& a, std::string* witness) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      for (int z = 0; z < a.size(); ++z)
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)))
          return set_witness(witness, a.tuple({x, y, z}));
  return true;
}

bool is_quasi_involutive(const FinResLat& a, std::string* witness) {
  for (int x = 0; x < a.size(); ++x)
    if (a.gamma(x) != x) return set_witness(witness, a.tuple({x}));
  return true;
}

bool is_star_involutive(const FinResLat& a, std::string* witness) {
  for (int x = 0; x < a.size(); ++x)
    if (a.star_lo(a.star_lo(x)) != x) return set_witness(witness, a.tuple({x}));
  return true;
}

bool is_rigid(const FinResLat& a, std::string* witness) {
  for (int x = 0; x < a.size(); ++x) {
    int r = a.rinv(x), l = a.linv(x);
    if (a.star_lo(a.star_lo(r)) != r || a.star_lo(a.star_lo(l)) != l)
      return set_witness(witness, a.tuple({x}));
  }
  return true;
}

bool is_conjunctive(const FinResLat& a, std::string* witness) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.gamma(a.meet(x, y)) != a.meet(a.gamma(x), a.gamma(y)))
        return set_witness(witness, a.tuple({x, y}));
  return true;
}

void require_conic_idempotent(const FinResLat& a) {
  std::string w;
  if (!is_conic(a, &w)) fail(Errc::NotConic, "witness " + w);
  if (!is_idempotent(a, &w)) fail(Errc::NotIdempotent, "witness " + w);
}

Report verify_nucleus(const FinResLat& a) {
  require_conic_idempotent(a);
  Report rep;
  const int n = a.size();
  std::string w;
  bool incr = true, mono = true, idem = true, nuc = true;
  for (int x = 0; x < n && incr; ++x)
    if (!a.leq(x, a.gamma(x))) { incr = false; w = a.tuple({x}); }
  rep.add("gamma increasing", incr, w);
  w.clear();
  for (int x = 0; x < n && mono; ++x)
    for (int y = 0; y < n && mono; ++y)
      if (a.leq(x, y) && !a.leq(a.gamma(x), a.gamma(y))) { mono = false; w = a.tuple({x, y}); }
  rep.add("gamma monotone", mono, w);
  w.clear();
  for (int x = 0; x < n && idem; ++x)
    if (a.gamma(a.gamma(x)) != a.gamma(x)) { idem = false; w = a.tuple({x}); }
  rep.add("gamma idempotent", idem, w);
  w.clear();
  for (int x = 0; x < n && nuc; ++x)
    for (int y = 0; y < n && nuc; ++y)
      if (!a.leq(a.mult(a.gamma(x), a.gamma(y)), a.gamma(a.mult(x, y)))) {
        nuc = false;
        w = a.tuple({x, y});
      }
  rep.add("gamma(x)gamma(y) <= gamma(xy)", nuc, w);
  // Image of gamma equals the set of inverse elements.
  std::uint64_t image = 0, inverses = 0;
  for (int x = 0; x < n; ++x) {
    image |= 1ull << a.gamma(x);
    inverses |= 1ull << a.linv(x);
    inverses |= 1ull << a.rinv(x);
  }
  rep.add("image(gamma) = inverse elements", image == inverses);
  if (!rep.ok()) return rep;
  return rep;
}

bool subuniverse_closed(const FinResLat& a, std::uint64_t subset, std::string* witness) {
  if (!((subset >> a.unit()) & 1u)) {
    if (witness) *witness = "unit missing";
    return false;
  }
  std::vector<int> elems;
  for (int i = 0; i < a.size(); ++i)
    if ((subset >> i) & 1u) elems.push_back(i);
  for (int x : elems)
    for (int y : elems) {
      int ops[5] = {a.meet(x, y), a.join(x, y), a.mult(x, y), a.ld(x, y), a.rd(x, y)};
      for (int v : ops)
        if (!((subset >> v) & 1u)) {
          if (witness) *witness = a.tuple({x, y}) + " generates " + a.label(v);
          return false;
        }
    }
  return true;
}

SubAlgebra induced_subalgebra(const FinResLat& a, std::uint64_t subset) {
  std::string w;
  if (!subuniverse_closed(a, subset, &w)) fail(Errc::BadInput, "subset not closed: " + w);
  SubAlgebra sub;
  std::vector<int> back(a.size(), -1);
  for (int i = 0; i < a.size(); ++i)
    if ((subset >> i) & 1u) {
      back[i] = static_cast<int>(sub.parent_index.size());
      sub.parent_index.push_back(i);
    }
  int m = static_cast<int>(sub.parent_index.size());
  std::vector<std::string> labels(m);
  std::vector<std::uint8_t> leq(m * m, 0), mult(m * m, 0);
  for (int i = 0; i < m; ++i) {
    labels[i] = a.label(sub.parent_index[i]);
    for (int j = 0; j < m; ++j) {
      leq[i * m + j] = a.leq(sub.parent_index[i], sub.parent_index[j]);
      mult[i * m + j] = static_cast<std::uint8_t>(back[a.mult(sub.parent_index[i], sub.parent_index[j])]);
    }
  }
  sub.algebra = FinResLat::build_on_poset(std::move(labels), Poset::from_leq(m, leq), mult,
                                          back[a.unit()]);
  return sub;
}

std::vector<std::uint64_t> all_subuniverses(const FinResLat& a) {
  // Closure-based: grow from the least subuniverse by single-element joins.
  auto close = [&](std::uint64_t seed) {
    std::uint64_t cur = seed | (1ull << a.unit());
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> elems;
      for (int i = 0; i < a.size(); ++i)
        if ((cur >> i) & 1u) elems.push_back(i);
      for (int x : elems)
        for (int y : elems) {
          int ops[5] = {a.meet(x, y), a.join(x, y), a.mult(x, y), a.ld(x, y), a.rd(x, y)};
          for (int v : ops)
            if (!((cur >> v) & 1u)) {
              cur |= 1ull << v;
              changed = true;
            }
        }
    }
    return cur;
  };
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> work{close(0)};
  seen.insert(work[0]);
  for (std::size_t k = 0; k < work.size(); ++k) {
    std::uint64_t base = work[k];
    for (int e = 0; e < a.size(); ++e) {
      if ((base >> e) & 1u) continue;
      std::uint64_t grown = close(base | (1ull << e));
      if (seen.insert(grown).second) work.push_back(grown);
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  return out;
}

bool is_subalgebra_of(const FinResLat& a, const FinResLat& b, std::string* witness) {
  std::vector<int> img(a.size(), -1);
  for (int i = 0; i < a.size(); ++i) {
    img[i] = b.index_of(a.label(i));
    if (img[i] < 0) return set_witness(witness, a.label(i) + " not in ambient algebra");
  }
  if (img[a.unit()] != b.unit()) return set_witness(witness, "unit mismatch");
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      if (a.leq(i, j) != b.leq(img[i], img[j])) return set_witness(witness, "order differs at " + a.tuple({i, j}));
      int ops_a[5] = {a.meet(i, j), a.join(i, j), a.mult(i, j), a.ld(i, j), a.rd(i, j)};
      int ops_b[5] = {b.meet(img[i], img[j]), b.join(img[i], img[j]), b.mult(img[i], img[j]),
                      b.ld(img[i], img[j]), b.rd(img[i], img[j])};
      for (int k = 0; k < 5; ++k)
        if (img[ops_a[k]] != ops_b[k])
          return set_witness(witness, "operation " + std::to_string(k) + " differs at " + a.tuple({i, j}));
    }
  return true;
}

SubAlgebra skeleton(const FinResLat& a) {
  require_conic_idempotent(a);
  std::uint64_t inverses = 0;
  for (int x = 0; x < a.size(); ++x) {
    inverses |= 1ull << a.linv(x);
    inverses |= 1ull << a.rinv(x);
  }
  std::string w;
  if (!subuniverse_closed(a, inverses, &w)) fail(Errc::Internal, "skeleton not closed: " + w);
  SubAlgebra sub = induced_subalgebra(a, inverses);
  if (!sub.algebra.flags().chain) fail(Errc::Internal, "skeleton not a chain");
  if (!sub.algebra.flags().quasi_involutive) fail(Errc::Internal, "skeleton not quasi-involutive");
  return sub;
}

std::vector<BlockView> blocks(const FinResLat& a) {
  SubAlgebra skel = skeleton(a);
  std::vector<BlockView> out;
  for (int s = 0; s < skel.algebra.size(); ++s) out.push_back({skel.parent_index[s], {}, BlockKind::Trivial});
  // order blocks bottom-to-top along the skeleton chain
  std::sort(out.begin(), out.end(), [&](const BlockView& u, const BlockView& v) {
    return a.lt(u.skel_element, v.skel_element);
  });
  for (int x = 0; x < a.size(); ++x) {
    int g = a.gamma(x);
    for (auto& blk : out)
      if (blk.skel_element == g) blk.elems.push_back(x);
  }
  for (auto& blk : out) blk.kind = block_kind(a, blk.skel_element);
  return out;
}

BlockKind block_kind(const FinResLat& a, int s) {
  require_conic_idempotent(a);
  std::vector<int> elems;
  for (int x = 0; x < a.size(); ++x)
    if (a.gamma(x) == s) elems.push_back(x);
  if (elems.size() == 1) return BlockKind::Trivial;
  Poset blk = a.order().restrict_to(elems);
  if (a.leq(s, a.unit())) {
    if (!blk.is_brouwerian())
      fail(Errc::Internal, "negative block of " + a.tuple({s}) + " not Brouwerian");
    return BlockKind::Brouwerian;
  }
  return blk.is_lattice() ? BlockKind::Lattice : BlockKind::ProperPrelattice;
}

FinResLat direct_product(const FinResLat& a, const FinResLat& b) {
  int n = a.size() * b.size();
  if (n > 64) fail(Errc::BadInput, "product too large");
  auto id = [&](int i, int j) { return i * b.size() + j; };
  std::vector<std::string> labels(n);
  std::vector<std::uint8_t> leq(n * n, 0), mult(n * n, 0);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      labels[id(i, j)] = a.label(i) + "|" + b.label(j);
      for (int k = 0; k < a.size(); ++k)
        for (int l = 0; l < b.size(); ++l) {
          leq[id(i, j) * n + id(k, l)] = a.leq(i, k) && b.leq(j, l);
          mult[id(i, j) * n + id(k, l)] = static_cast<std::uint8_t>(id(a.mult(i, k), b.mult(j, l)));
        }
    }
  return FinResLat::build_on_poset(std::move(labels), Poset::from_leq(n, leq), mult,
                                   id(a.unit(), b.unit()));
}

namespace {
std::vector<std::uint8_t> algebra_code(const FinResLat& a, const std::vector<int>& perm) {
  // perm[i] = new position of element i
  int n = a.size();
  std::vector<std::uint8_t> code;
  code.reserve(n * n * 2 + 1);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) code.push_back(a.leq(inv[i], inv[j]) ? 1 : 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) code.push_back(static_cast<std::uint8_t>(perm[a.mult(inv[i], inv[j])]));
  code.push_back(static_cast<std::uint8_t>(perm[a.unit()]));
  return code;
}
}  // namespace

bool isomorphic(const FinResLat& a, const FinResLat& b) {
  if (a.size() != b.size()) return false;
  int n = a.size();
  if (n > 8) {
    // Back-tracking search on label-free structure; enough for desk scale.
    std::vector<int> img(n, -1), used(n, 0);
    auto rec = [&](auto&& self, int i) -> bool {
      if (i == n) return true;
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        if ((i == a.unit()) != (v == b.unit())) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          if (a.leq(i, j) != b.leq(img[i] = v, img[j])) ok = false;
          if (ok && a.leq(j, i) != b.leq(img[j], v)) ok = false;
          if (ok) {
            int m1 = a.mult(i, j), m2 = a.mult(j, i);
            if (m1 <= i && img[m1] >= 0 && b.mult(v, img[j]) != img[m1]) ok = false;
            if (ok && m2 <= i && img[m2] >= 0 && b.mult(img[j], v) != img[m2]) ok = false;
          }
        }
        if (!ok) continue;
        img[i] = v;
        used[v] = 1;
        if (self(self, i + 1)) {
          // full verification of candidate map
          bool good = true;
          for (int x = 0; x < n && good; ++x)
            for (int y = 0; y < n && good; ++y) {
              if (a.leq(x, y) != b.leq(img[x], img[y])) good = false;
              if (good && img[a.mult(x, y)] != b.mult(img[x], img[y])) good = false;
            }
          if (good) return true;
        }
        used[v] = 0;
        img[i] = -1;
      }
      return false;
    };
    return rec(rec, 0);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best_a, best_b;
  do {
    auto ca = algebra_code(a, perm);
    auto cb = algebra_code(b, perm);
    if (best_a.empty() || ca < best_a) best_a = ca;
    if (best_b.empty() || cb < best_b) best_b = cb;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best_a == best_b;
}

}  // namespace ircl
