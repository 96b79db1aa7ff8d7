#include "ircl/chains.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace ircl {

namespace {

void require_idempotent_chain(const FinResLat& a) {
  std::string w;
  if (!is_chain(a, &w)) fail(Errc::NotAChain, "witness " + w);
  if (!is_idempotent(a, &w)) fail(Errc::NotIdempotent, "witness " + w);
}

}  // namespace

Report verify_igc(const IdGaloisConn& g) {
  Report rep;
  const int n = g.n;
  auto lbl = [&](int i) { return g.labels.empty() ? std::to_string(i) : g.labels[i]; };
  // 1. chain (total order by ranks): ranks must be a permutation of 0..n-1
  {
    std::vector<int> seen(n, 0);
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (g.rank[i] < 0 || g.rank[i] >= n || seen[g.rank[i]]++) ok = false;
    rep.add("condition 1: lattice (chain)", ok);
  }
  // 2. unit fixed by both maps
  rep.add("condition 2: 1^l = 1^r = 1", g.ell[g.unit] == g.unit && g.r[g.unit] == g.unit);
  // 3. Galois connection identities
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      if (!g.leq(x, g.r[g.ell[x]])) { ok = false; w = "x<=x^{lr} fails at " + lbl(x); }
      else if (!g.leq(x, g.ell[g.r[x]])) { ok = false; w = "x<=x^{rl} fails at " + lbl(x); }
      else if (g.ell[g.r[g.ell[x]]] != g.ell[x]) { ok = false; w = "x^{lrl}=x^l fails at " + lbl(x); }
      else if (g.r[g.ell[g.r[x]]] != g.r[x]) { ok = false; w = "x^{rlr}=x^r fails at " + lbl(x); }
    }
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        if (g.ell[g.join(x, y)] != g.meet(g.ell[x], g.ell[y])) {
          ok = false;
          w = "(x v y)^l = x^l ^ y^l fails at (" + lbl(x) + "," + lbl(y) + ")";
        } else if (g.r[g.join(x, y)] != g.meet(g.r[x], g.r[y])) {
          ok = false;
          w = "(x v y)^r = x^r ^ y^r fails at (" + lbl(x) + "," + lbl(y) + ")";
        }
      }
    rep.add("condition 3: Galois connection", ok, w);
  }
  rep.add("condition 4: totally ordered", true);  // rank representation
  // 5. splitting: nothing strictly between x^l and x^r
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        int lo = g.meet(g.ell[x], g.r[x]);
        int hi = g.join(g.ell[x], g.r[x]);
        if (!g.leq(y, lo) && !g.leq(hi, y)) {
          ok = false;
          w = lbl(y) + " lies between inverses of " + lbl(x);
        }
      }
    rep.add("condition 5: splitting pair", ok, w);
  }
  return rep;
}

IdGaloisConn igc_reduct(const FinResLat& a) {
  require_idempotent_chain(a);
  IdGaloisConn g;
  g.n = a.size();
  g.unit = a.unit();
  g.labels = a.labels();
  g.rank.assign(g.n, 0);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (a.lt(j, i)) ++g.rank[i];
  g.ell.resize(g.n);
  g.r.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    g.ell[i] = a.linv(i);
    g.r[i] = a.rinv(i);
  }
  return g;
}

FinResLat residuated_from_igc(const IdGaloisConn& g) {
  Report rep = verify_igc(g);
  if (!rep.ok()) {
    for (const auto& it : rep.items)
      if (!it.pass) fail(Errc::InvalidIGC, it.check + " (" + it.detail + ")");
  }
  const int n = g.n;
  std::vector<std::uint8_t> leq(n * n, 0), mult(n * n), ld(n * n), rd(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      leq[x * n + y] = g.leq(x, y);
      mult[x * n + y] = static_cast<std::uint8_t>(g.leq(x, g.ell[y]) ? g.meet(x, y) : g.join(x, y));
      ld[x * n + y] = static_cast<std::uint8_t>(g.leq(x, y) ? g.join(g.r[x], y) : g.meet(g.r[x], y));
      rd[y * n + x] = static_cast<std::uint8_t>(g.leq(x, y) ? g.join(g.ell[x], y) : g.meet(g.ell[x], y));
    }
  return FinResLat::build_on_poset(std::vector<std::string>(g.labels), Poset::from_leq(n, leq),
                                   mult, g.unit, &ld, &rd);
}

std::vector<std::uint8_t> monoidal_preorder(const FinResLat& a) {
  require_idempotent_chain(a);
  std::vector<std::uint8_t> pre(a.size() * a.size(), 0);
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) pre[x * a.size() + y] = a.mult(x, y) == x;
  return pre;
}

std::vector<std::uint8_t> natural_order(const FinResLat& a) {
  require_idempotent_chain(a);
  const int n = a.size();
  std::vector<std::uint8_t> ord(n * n, 0);
  auto pre = monoidal_preorder(a);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ord[x * n + y] = a.mult(x, y) == x && a.mult(y, x) == x;
      // x <_n y iff x strictly below y in the monoidal preorder
      bool strict = pre[x * n + y] && !pre[y * n + x];
      bool natural_strict = ord[x * n + y] && x != y;
      if (strict != natural_strict) fail(Errc::Internal, "natural/monoidal order mismatch");
    }
  return ord;
}

EMP to_emp(const FinResLat& a) {
  require_idempotent_chain(a);
  const int n = a.size();
  auto pre = monoidal_preorder(a);
  std::vector<std::uint8_t> pos(n, 0), neg(n, 0);
  for (int x = 0; x < n; ++x) {
    pos[x] = a.leq(a.unit(), x);
    neg[x] = a.leq(x, a.unit());
  }
  std::vector<int> star(n);
  for (int x = 0; x < n; ++x) star[x] = a.star_lo(x);
  return EMP::from_raw(n, a.labels(), pre, pos, neg, star, a.unit());
}

FinResLat from_emp(const EMP& p) {
  Report rep = verify_emp(p);
  if (!rep.ok()) fail(Errc::InvalidEMP, rep.items[0].detail);
  const int n = p.n;
  // chain order: strict negatives by layer ascending, then 1, then strict
  // positives by layer descending
  std::vector<int> order;
  for (const auto& l : p.layers)
    if (l.neg >= 0 && l.neg != p.unit) order.push_back(l.neg);
  order.push_back(p.unit);
  for (int li = static_cast<int>(p.layers.size()) - 1; li >= 0; --li) {
    const Layer& l = p.layers[li];
    if (l.kind != LayerKind::Unit && l.pos >= 0) order.push_back(l.pos);
  }
  std::vector<int> rank(n, -1);
  for (int pos_i = 0; pos_i < n; ++pos_i) rank[order[pos_i]] = pos_i;

  // inverses from the layer configuration
  std::vector<int> ell(n), rr(n);
  for (const auto& l : p.layers) {
    switch (l.kind) {
      case LayerKind::Unit:
        ell[l.pos] = rr[l.pos] = l.pos;
        break;
      case LayerKind::Pos:
        ell[l.pos] = rr[l.pos] = p.star[l.pos];
        break;
      case LayerKind::Neg:
        ell[l.neg] = rr[l.neg] = p.star[l.neg];
        break;
      case LayerKind::PairL:
        ell[l.pos] = l.neg;
        rr[l.pos] = p.star[l.pos];
        ell[l.neg] = p.star[l.neg];
        rr[l.neg] = l.pos;
        break;
      case LayerKind::PairR:
        ell[l.pos] = p.star[l.pos];
        rr[l.pos] = l.neg;
        ell[l.neg] = l.pos;
        rr[l.neg] = p.star[l.neg];
        break;
    }
  }
  IdGaloisConn g;
  g.n = n;
  g.unit = p.unit;
  g.labels = p.labels;
  g.rank = rank;
  g.ell = ell;
  g.r = rr;
  return residuated_from_igc(g);
}

PairClass classify_pair(const FinResLat& a, int x, int y) {
  require_idempotent_chain(a);
  if (x == a.unit() && y == a.unit()) return PairClass::C;  // convention
  if (!a.leq(a.unit(), x)) fail(Errc::NotConfigured, "first element must be positive");
  if (!a.leq(y, a.unit())) fail(Errc::NotConfigured, "second element must be negative");
  auto covers = [&](int lo, int hi) {
    if (!a.lt(lo, hi)) return false;
    for (int k = 0; k < a.size(); ++k)
      if (a.lt(lo, k) && a.lt(k, hi)) return false;
    return true;
  };
  bool left = a.mult(x, y) == x && a.mult(y, x) == y;
  bool right = a.mult(x, y) == y && a.mult(y, x) == x;
  bool comm = a.linv(x) == a.rinv(x) && a.linv(x) == y;
  if (left + right + comm != 1) {
    if (!left && !right && !comm) fail(Errc::NotConfigured, "pair " + a.tuple({x, y}) + " in no configuration");
    fail(Errc::Internal, "ambiguous pair configuration at " + a.tuple({x, y}));
  }
  if (left) {
    // all characterizations of an L-pair must agree
    bool ok = covers(a.rinv(x), a.linv(x)) && a.linv(x) == y;
    ok = ok && covers(a.linv(y), a.rinv(y)) && a.rinv(y) == x;
    ok = ok && covers(a.linv(a.linv(x)), x) && y == a.linv(x);
    ok = ok && covers(a.rinv(a.rinv(y)), y) && x == a.rinv(y);
    ok = ok && a.rinv(a.linv(x)) == x && !a.central(x) && y == a.linv(x);
    ok = ok && a.linv(a.rinv(y)) == y && !a.central(y) && x == a.rinv(y);
    if (!ok) fail(Errc::Internal, "L characterizations disagree at " + a.tuple({x, y}));
    return PairClass::L;
  }
  if (right) {
    bool ok = covers(a.linv(x), a.rinv(x)) && a.rinv(x) == y;
    ok = ok && covers(a.rinv(y), a.linv(y)) && a.linv(y) == x;
    ok = ok && covers(a.rinv(a.rinv(x)), x) && y == a.rinv(x);
    ok = ok && covers(a.linv(a.linv(y)), y) && x == a.linv(y);
    ok = ok && a.linv(a.rinv(x)) == x && !a.central(x) && y == a.rinv(x);
    ok = ok && a.rinv(a.linv(y)) == y && !a.central(y) && x == a.linv(y);
    if (!ok) fail(Errc::Internal, "R characterizations disagree at " + a.tuple({x, y}));
    return PairClass::R;
  }
  return PairClass::C;
}

std::uint64_t generate_subalgebra(const FinResLat& a, std::uint64_t seeds) {
  require_idempotent_chain(a);
  std::uint64_t cur = seeds | (1ull << a.unit());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < a.size(); ++x) {
      if (!((cur >> x) & 1u)) continue;
      int s = a.star_lo(x), p = a.partner(x);
      if (!((cur >> s) & 1u)) { cur |= 1ull << s; changed = true; }
      if (!((cur >> p) & 1u)) { cur |= 1ull << p; changed = true; }
    }
  }
  // cross-check: closure under star and partner is closure under everything
  std::uint64_t brute = seeds | (1ull << a.unit());
  changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < a.size(); ++x) {
      if (!((brute >> x) & 1u)) continue;
      for (int y = 0; y < a.size(); ++y) {
        if (!((brute >> y) & 1u)) continue;
        int ops[5] = {a.meet(x, y), a.join(x, y), a.mult(x, y), a.ld(x, y), a.rd(x, y)};
        for (int v : ops)
          if (!((brute >> v) & 1u)) {
            brute |= 1ull << v;
            changed = true;
          }
      }
    }
  }
  if (brute != cur) fail(Errc::Internal, "star/partner closure disagrees with full closure");
  return cur;
}

CrownDecomposition crown_decomposition(const FinResLat& a) {
  std::string w;
  if (!is_star_involutive(a, &w)) fail(Errc::NotStarInvolutive, "witness " + w);
  require_idempotent_chain(a);
  EMP p = to_emp(a);
  CrownDecomposition dec;
  // scan bodies: Neg, pairs..., Pos
  std::size_t i = 0;
  std::size_t top = p.layers.size() - 1;  // unit layer
  while (i < top) {
    if (p.layers[i].kind != LayerKind::Neg)
      fail(Errc::Internal, "crown body must start with a negative singleton");
    Crown c;
    c.type.kind = CrownType::Finite;
    c.elements.push_back(p.layers[i].neg);
    ++i;
    int pair_index = 0;
    while (i < top && (p.layers[i].kind == LayerKind::PairL || p.layers[i].kind == LayerKind::PairR)) {
      ++pair_index;
      if (p.layers[i].kind == LayerKind::PairL) c.type.left_ties.push_back(pair_index);
      c.elements.push_back(p.layers[i].pos);
      c.elements.push_back(p.layers[i].neg);
      ++i;
    }
    c.type.pairs = pair_index;
    if (i >= top || p.layers[i].kind != LayerKind::Pos)
      fail(Errc::Internal, "crown body must close with a positive singleton");
    c.elements.push_back(p.layers[i].pos);
    ++i;
    dec.crowns.push_back(std::move(c));
  }
  // Every piece together with 1 is the subalgebra generated by any element,
  // and distinct pieces meet only at 1.
  for (const auto& c : dec.crowns) {
    std::uint64_t piece = 1ull << a.unit();
    for (int e : c.elements) piece |= 1ull << e;
    for (int e : c.elements) {
      if (generate_subalgebra(a, 1ull << e) != piece)
        fail(Errc::Internal, "piece not one-generated from " + a.label(e));
    }
    // each piece with 1 is a finite crown of the recovered type
    SubAlgebra sub = induced_subalgebra(a, piece);
    EMP sub_emp = to_emp(sub.algebra);
    if (sub_emp.canonical_code() != crown_emp(c.type.pairs, c.type.left_ties).canonical_code())
      fail(Errc::Internal, "piece is not the stated crown");
  }
  // the nested sum over the recovered index chain reproduces the algebra
  {
    std::vector<EMP> parts;
    for (const auto& c : dec.crowns) {
      std::uint64_t piece = 1ull << a.unit();
      for (int e : c.elements) piece |= 1ull << e;
      parts.push_back(to_emp(induced_subalgebra(a, piece).algebra));
    }
    if (!parts.empty()) {
      FinResLat rebuilt = from_emp(nested_sum_emp(parts));
      std::string w;
      if (rebuilt.size() != a.size() || !is_subalgebra_of(rebuilt, a, &w))
        fail(Errc::Internal, "nested sum does not reproduce the chain: " + w);
    }
  }
  return dec;
}

namespace {

void check_nested_sum_side_condition(const FinResLat& s, int index) {
  for (int x = 0; x < s.size(); ++x) {
    if (x == s.unit()) continue;
    if (s.linv(x) == s.unit() || s.rinv(x) == s.unit())
      fail(Errc::SideConditionViolated,
           "summand " + std::to_string(index) + ": inverse of " + s.label(x) + " is the unit");
    for (int y = 0; y < s.size(); ++y) {
      if (y == s.unit()) continue;
      if (s.join(x, y) == s.unit() || s.meet(x, y) == s.unit())
        fail(Errc::SideConditionViolated,
             "summand " + std::to_string(index) + ": " + s.tuple({x, y}) + " bounds to the unit");
    }
  }
}

}  // namespace

FinResLat nested_sum(const std::vector<FinResLat>& summands) {
  if (summands.empty()) fail(Errc::BadInput, "nested sum needs at least one summand");
  for (std::size_t k = 0; k + 1 < summands.size(); ++k)
    check_nested_sum_side_condition(summands[k], static_cast<int>(k));
  // merged universe: all non-unit elements plus one shared unit
  struct Ref { int summand, elem; };
  std::vector<Ref> refs;
  std::vector<std::string> labels;
  std::set<std::string> used;
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (int e = 0; e < summands[k].size(); ++e) {
      if (e == summands[k].unit()) continue;
      refs.push_back({static_cast<int>(k), e});
      if (!used.insert(summands[k].label(e)).second)
        fail(Errc::BadInput, "summands share the label " + summands[k].label(e));
      labels.push_back(summands[k].label(e));
    }
  int unit = static_cast<int>(refs.size());
  refs.push_back({static_cast<int>(summands.size()) - 1, summands.back().unit()});
  const std::string unit_label = summands.back().label(summands.back().unit());
  if (used.count(unit_label)) fail(Errc::BadInput, "non-unit element labelled " + unit_label);
  labels.push_back(unit_label);
  const int n = unit + 1;
  if (n > 64) fail(Errc::BadInput, "nested sum too large");

  auto in_summand = [&](int k, int x) {
    // element of the merged algebra seen from summand k; -1 when alien
    if (x == unit) return summands[k].unit();
    return refs[x].summand == k ? refs[x].elem : -1;
  };
  std::vector<std::uint8_t> leq(n * n, 0), mult(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int kx = refs[x].summand, ky = refs[y].summand;
      const FinResLat& ax = summands[kx];
      if (x == y) { leq[x * n + y] = 1; }
      else if (x == unit || y == unit || kx == ky) {
        int k = (x == unit) ? ky : kx;
        const FinResLat& s = summands[k];
        leq[x * n + y] = s.leq(in_summand(k, x), in_summand(k, y));
      } else if (kx < ky) {
        // inner summand sits at the unit of the outer one
        leq[x * n + y] = ax.lt(refs[x].elem, ax.unit());
      } else {
        const FinResLat& ay = summands[ky];
        leq[x * n + y] = ay.lt(ay.unit(), refs[y].elem);
      }
      // product: within a summand natively; across, outer absorbs
      int k = (x == unit) ? ky : (y == unit ? kx : std::min(kx, ky));
      const FinResLat& s = summands[k];
      int xs = in_summand(k, x), ys = in_summand(k, y);
      if (xs < 0) xs = s.unit();
      if (ys < 0) ys = s.unit();
      int prod = s.mult(xs, ys);
      int merged = (prod == s.unit()) ? unit : -1;
      if (merged < 0)
        for (int t = 0; t < n; ++t)
          if (t != unit && refs[t].summand == k && refs[t].elem == prod) merged = t;
      mult[x * n + y] = static_cast<std::uint8_t>(merged);
    }
  return FinResLat::build_on_poset(std::move(labels), Poset::from_leq(n, leq), mult, unit);
}

EMP nested_sum_emp(const std::vector<EMP>& summands) {
  if (summands.empty()) fail(Errc::BadInput, "nested sum needs at least one summand");
  for (std::size_t k = 0; k + 1 < summands.size(); ++k) {
    const EMP& p = summands[k];
    for (int x = 0; x < p.n; ++x)
      if (x != p.unit && p.star[x] == p.unit)
        fail(Errc::SideConditionViolated,
             "summand " + std::to_string(k) + ": star of " + p.labels[x] + " is the unit");
  }
  std::vector<Layer> layers;
  std::vector<std::string> labels;
  std::set<std::string> used;
  auto add_label = [&](const std::string& s) {
    if (!used.insert(s).second) fail(Errc::BadInput, "summands share the label " + s);
    labels.push_back(s);
    return static_cast<int>(labels.size()) - 1;
  };
  for (const auto& p : summands)
    for (const auto& l : p.layers) {
      if (l.kind == LayerKind::Unit) continue;
      Layer nl{l.kind, -1, -1};
      if (l.pos >= 0) nl.pos = add_label(p.labels[l.pos]);
      if (l.neg >= 0) nl.neg = add_label(p.labels[l.neg]);
      layers.push_back(nl);
    }
  int unit = static_cast<int>(labels.size());
  const EMP& top = summands.back();
  const std::string unit_label = top.labels[top.unit];
  if (used.count(unit_label)) fail(Errc::BadInput, "non-unit element labelled " + unit_label);
  labels.push_back(unit_label);
  layers.push_back(Layer{LayerKind::Unit, unit, -1});
  return EMP::from_layers(layers, std::move(labels), unit);
}

}  // namespace ircl
