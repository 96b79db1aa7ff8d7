#include "ircl/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ircl {

void validate_system(DecompSystem& d) {
  const FinResLat& s = d.skeleton;
  std::string w;
  if (!is_chain(s, &w)) fail(Errc::InvalidSystem, "skeleton not a chain: " + w);
  if (!is_idempotent(s, &w)) fail(Errc::InvalidSystem, "skeleton not idempotent: " + w);
  if (static_cast<int>(d.blocks.size()) != s.size())
    fail(Errc::InvalidSystem, "one block per skeleton element required");
  d.lower_cover.assign(s.size(), -1);
  for (int i = 0; i < s.size(); ++i) {
    const DecompBlock& b = d.blocks[i];
    int m = static_cast<int>(b.labels.size());
    if (m < 1 || b.order.n != m) fail(Errc::InvalidSystem, "block of " + s.label(i) + " malformed");
    if (b.order.top() != std::optional<int>(b.top) || b.labels[b.top] != s.label(i))
      fail(Errc::InvalidSystem, "block top of " + s.label(i) + " must be the skeleton element");
    if (!b.order.is_prelattice())
      fail(Errc::InvalidSystem, "block of " + s.label(i) + " is not a topped prelattice");
    bool negative = s.leq(i, s.unit());
    if (negative && !b.order.is_brouwerian())
      fail(Errc::InvalidSystem, "negative block of " + s.label(i) + " must be a Brouwerian lattice");
    if (!s.central(i) && m != 1)
      fail(Errc::InvalidSystem, "non-central skeleton element " + s.label(i) + " must have a trivial block");
    if (!b.order.is_lattice()) {
      // proper prelattice: a lower cover in the skeleton must exist
      int cover = -1;
      for (int j = 0; j < s.size(); ++j)
        if (s.lt(j, i) && (cover < 0 || s.lt(cover, j))) cover = j;
      if (cover < 0)
        fail(Errc::InvalidSystem,
             "proper prelattice block of " + s.label(i) + " needs a lower cover in the skeleton");
      d.lower_cover[i] = cover;
    }
  }
  // block labels must be globally distinct
  std::set<std::string> seen;
  for (const auto& b : d.blocks)
    for (const auto& l : b.labels)
      if (!seen.insert(l).second) fail(Errc::InvalidSystem, "duplicate element label " + l);
}

DecompSystem extract_system(const FinResLat& a) {
  require_conic_idempotent(a);
  DecompSystem d;
  SubAlgebra skel = skeleton(a);
  d.skeleton = skel.algebra;
  d.blocks.resize(d.skeleton.size());
  for (int si = 0; si < d.skeleton.size(); ++si) {
    int s_parent = skel.parent_index[si];
    std::vector<int> elems;
    for (int x = 0; x < a.size(); ++x)
      if (a.gamma(x) == s_parent) elems.push_back(x);
    // put the top last for a stable, readable layout
    std::stable_sort(elems.begin(), elems.end(), [&](int u, int v) {
      if (u == s_parent) return false;
      if (v == s_parent) return true;
      return u < v;
    });
    DecompBlock b;
    for (int e : elems) b.labels.push_back(a.label(e));
    b.order = a.order().restrict_to(elems);
    b.top = static_cast<int>(elems.size()) - 1;
    d.blocks[si] = std::move(b);
  }
  validate_system(d);
  return d;
}

FinResLat build_algebra(const DecompSystem& input) {
  DecompSystem d = input;
  validate_system(d);
  const FinResLat& s = d.skeleton;
  struct Ref { int skel, elem; };
  std::vector<Ref> refs;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> global(s.size());  // block element -> global id
  for (int si = 0; si < s.size(); ++si) {
    global[si].resize(d.blocks[si].labels.size());
    for (int e = 0; e < static_cast<int>(d.blocks[si].labels.size()); ++e) {
      global[si][e] = static_cast<int>(refs.size());
      refs.push_back({si, e});
      labels.push_back(d.blocks[si].labels[e]);
    }
  }
  const int n = static_cast<int>(refs.size());
  if (n > 64) fail(Errc::InvalidSystem, "system too large");
  int unit = global[s.unit()][d.blocks[s.unit()].top];

  // ordinal sum order
  std::vector<std::uint8_t> leq(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (refs[x].skel == refs[y].skel)
        leq[x * n + y] = d.blocks[refs[x].skel].order.leq(refs[x].elem, refs[y].elem);
      else
        leq[x * n + y] = s.lt(refs[x].skel, refs[y].skel);
    }
  Poset order = Poset::from_leq(n, leq);

  auto block_meet = [&](int si, int u, int v) { return d.blocks[si].order.meet(u, v); };
  auto block_join = [&](int si, int u, int v) { return d.blocks[si].order.join(u, v); };
  auto global_meet = [&](int x, int y) -> int {
    auto m = order.meet(x, y);
    if (!m) fail(Errc::InvalidSystem, "ordinal sum has no meet for " + labels[x] + "," + labels[y]);
    return *m;
  };
  auto global_join = [&](int x, int y) -> int {
    auto j = order.join(x, y);
    if (!j) fail(Errc::InvalidSystem, "ordinal sum has no join for " + labels[x] + "," + labels[y]);
    return *j;
  };

  std::vector<std::uint8_t> mult(n * n, 0), ld(n * n, 0), rd(n * n, 0);
  int one = s.unit();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int si = refs[x].skel, ti = refs[y].skel;
      int prod;
      if (si == ti) {
        prod = s.leq(si, one) ? global[si][*block_meet(si, refs[x].elem, refs[y].elem)]
                              : global[si][*block_join(si, refs[x].elem, refs[y].elem)];
      } else {
        prod = s.mult(si, ti) == si ? x : y;
      }
      mult[x * n + y] = static_cast<std::uint8_t>(prod);
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int si = refs[x].skel, ti = refs[y].skel;
      int sr = global[s.rinv(si)][d.blocks[s.rinv(si)].top];
      int sl = global[s.linv(si)][d.blocks[s.linv(si)].top];
      int val_ld, val_rd;
      if (leq[x * n + y]) {
        val_ld = global_join(sr, y);
        val_rd = global_join(sl, y);
      } else if (s.lt(ti, si) || (s.lt(one, si) && si == ti)) {
        val_ld = global_meet(sr, y);
        val_rd = global_meet(sl, y);
      } else if (si == ti && s.leq(si, one)) {
        auto rp = d.blocks[si].order.rel_pseudocomplement(refs[x].elem, refs[y].elem);
        if (!rp) fail(Errc::InvalidSystem, "missing implication in block of " + s.label(si));
        val_ld = val_rd = global[si][*rp];
      } else {
        fail(Errc::Internal, "division case split not exhaustive");
      }
      ld[x * n + y] = static_cast<std::uint8_t>(val_ld);
      rd[y * n + x] = static_cast<std::uint8_t>(val_rd);
    }
  FinResLat a = FinResLat::build_on_poset(std::move(labels), std::move(order), mult, unit, &ld, &rd);
  std::string w;
  if (!is_conic(a, &w) || !is_idempotent(a, &w))
    fail(Errc::Internal, "built algebra not conic idempotent: " + w);
  return a;
}

namespace {

int block_index_of_label(const DecompBlock& b, const std::string& label) {
  for (int i = 0; i < static_cast<int>(b.labels.size()); ++i)
    if (b.labels[i] == label) return i;
  return -1;
}

bool subsystem_conditions(const DecompSystem& da, const DecompSystem& db, std::string* witness) {
  auto fail_with = [&](std::string msg) {
    if (witness) *witness = std::move(msg);
    return false;
  };
  // 1. skeleton subalgebra
  std::string w;
  if (!is_subalgebra_of(da.skeleton, db.skeleton, &w))
    return fail_with("condition 1: " + w);
  for (int sa = 0; sa < da.skeleton.size(); ++sa) {
    int sb = db.skeleton.index_of(da.skeleton.label(sa));
    const DecompBlock& ba = da.blocks[sa];
    const DecompBlock& bb = db.blocks[sb];
    std::vector<int> img(ba.labels.size(), -1);
    for (int i = 0; i < static_cast<int>(ba.labels.size()); ++i) {
      img[i] = block_index_of_label(bb, ba.labels[i]);
      if (img[i] < 0) return fail_with("block element " + ba.labels[i] + " missing in ambient block");
    }
    bool negative = da.skeleton.leq(sa, da.skeleton.unit());
    for (int i = 0; i < static_cast<int>(ba.labels.size()); ++i)
      for (int j = 0; j < static_cast<int>(ba.labels.size()); ++j) {
        if (ba.order.leq(i, j) != bb.order.leq(img[i], img[j]))
          return fail_with("block order differs at " + ba.labels[i] + "," + ba.labels[j]);
        auto ja = ba.order.join(i, j);
        auto jb = bb.order.join(img[i], img[j]);
        if (!ja || !jb || img[*ja] != *jb)
          return fail_with("condition 3: join not preserved in block of " + da.skeleton.label(sa));
        auto mb = bb.order.meet(img[i], img[j]);
        if (mb) {
          // meets defined in the ambient block must stay inside
          auto ma = ba.order.meet(i, j);
          if (!ma || img[*ma] != *mb)
            return fail_with((negative ? "condition 2" : "condition 3") +
                             std::string(": meet escapes block of ") + da.skeleton.label(sa));
        }
        if (negative) {
          auto ra = ba.order.rel_pseudocomplement(i, j);
          auto rb = bb.order.rel_pseudocomplement(img[i], img[j]);
          if (!ra || !rb || img[*ra] != *rb)
            return fail_with("condition 2: implication not preserved in block of " +
                             da.skeleton.label(sa));
        }
      }
    // 4. proper prelattice blocks force the ambient lower cover into the
    // subsystem skeleton
    if (!ba.order.is_lattice()) {
      int cover = -1;
      for (int j = 0; j < db.skeleton.size(); ++j)
        if (db.skeleton.lt(j, sb) && (cover < 0 || db.skeleton.lt(cover, j))) cover = j;
      if (cover < 0) return fail_with("condition 4: ambient lower cover missing");
      if (da.skeleton.index_of(db.skeleton.label(cover)) < 0)
        return fail_with("condition 4: lower cover " + db.skeleton.label(cover) +
                         " not in the subsystem skeleton");
    }
  }
  return true;
}

}  // namespace

bool is_subsystem(const DecompSystem& da, const DecompSystem& db, std::string* witness) {
  DecompSystem a = da, b = db;
  validate_system(a);
  validate_system(b);
  bool cond = subsystem_conditions(a, b, witness);
  // cross-check against the direct subalgebra test on the built algebras
  bool direct = is_subalgebra_of(build_algebra(a), build_algebra(b));
  if (cond != direct) fail(Errc::Internal, "subsystem conditions disagree with subalgebra test");
  return cond;
}

namespace {

bool sgsm_blockwise(const FinResLat& a, bool central) {
  DecompSystem d = extract_system(a);
  for (int s = 0; s < d.skeleton.size(); ++s) {
    bool strictly_positive = d.skeleton.lt(d.skeleton.unit(), s);
    bool nonunit = s != d.skeleton.unit();
    if ((central ? nonunit : strictly_positive) && d.blocks[s].labels.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_sgsm(const FinResLat& a) {
  require_conic_idempotent(a);
  std::string w;
  if (!is_commutative(a, &w)) fail(Errc::NotCommutative, "witness " + w);
  bool blockwise = sgsm_blockwise(a, false);
  // identity route: (x v 1)** = x v 1, with x* = x -> 1
  bool identity = true;
  for (int x = 0; x < a.size() && identity; ++x) {
    int p = a.join(x, a.unit());
    if (a.rinv(a.rinv(p)) != p) identity = false;
  }
  if (blockwise != identity) fail(Errc::Internal, "sgsm block test disagrees with identity");
  return blockwise;
}

bool is_central_sgsm(const FinResLat& a) {
  require_conic_idempotent(a);
  std::string w;
  if (!is_commutative(a, &w)) fail(Errc::NotCommutative, "witness " + w);
  bool blockwise = sgsm_blockwise(a, true);
  // identity route: sgsm plus 1 <= x** v (x** -> x)
  bool identity = is_sgsm(a);
  for (int x = 0; x < a.size() && identity; ++x) {
    int xss = a.rinv(a.rinv(x));
    if (!a.leq(a.unit(), a.join(xss, a.ld(xss, x)))) identity = false;
  }
  if (blockwise != identity) fail(Errc::Internal, "central sgsm block test disagrees with identity");
  return blockwise;
}

}  // namespace ircl
