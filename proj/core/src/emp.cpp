#include "ircl/emp.hpp"

#include <algorithm>
#include <set>

namespace ircl {

bool EMP::positive(int x) const {
  const Layer& l = layers[layer_of[x]];
  return l.kind == LayerKind::Unit || l.pos == x;
}

bool EMP::negative(int x) const {
  const Layer& l = layers[layer_of[x]];
  return l.kind == LayerKind::Unit || l.neg == x;
}

int EMP::partner(int x) const {
  const Layer& l = layers[layer_of[x]];
  if (l.size() < 2) return x;
  return l.pos == x ? l.neg : l.pos;
}

std::vector<std::uint8_t> EMP::canonical_code() const {
  std::vector<std::uint8_t> code;
  code.reserve(layers.size());
  for (const auto& l : layers) code.push_back(static_cast<std::uint8_t>(l.kind));
  return code;
}

EMP EMP::from_layers(const std::vector<Layer>& layers, std::vector<std::string> labels, int unit) {
  EMP p;
  p.layers = layers;
  p.labels = std::move(labels);
  p.n = static_cast<int>(p.labels.size());
  p.unit = unit;
  if (p.layers.empty() || p.layers.back().kind != LayerKind::Unit)
    fail(Errc::InvalidEMP, "top layer must be the unit");
  if (p.n >= 2 && p.layers.front().kind != LayerKind::Neg)
    fail(Errc::InvalidEMP, "condition 2: bottom layer must be a negative singleton");
  {
    std::set<std::string> distinct(p.labels.begin(), p.labels.end());
    if (static_cast<int>(distinct.size()) != p.n) fail(Errc::BadInput, "labels not distinct");
  }
  p.layer_of.assign(p.n, -1);
  int count = 0;
  for (int li = 0; li < static_cast<int>(p.layers.size()); ++li) {
    const Layer& l = p.layers[li];
    switch (l.kind) {
      case LayerKind::Unit:
        if (l.pos != p.unit || li + 1 != static_cast<int>(p.layers.size()))
          fail(Errc::InvalidEMP, "unit layer malformed");
        p.layer_of[l.pos] = li;
        ++count;
        break;
      case LayerKind::Pos:
        p.layer_of[l.pos] = li;
        ++count;
        break;
      case LayerKind::Neg:
        p.layer_of[l.neg] = li;
        ++count;
        break;
      case LayerKind::PairL:
      case LayerKind::PairR:
        p.layer_of[l.pos] = li;
        p.layer_of[l.neg] = li;
        count += 2;
        break;
    }
  }
  if (count != p.n || std::count(p.layer_of.begin(), p.layer_of.end(), -1) != 0)
    fail(Errc::BadInput, "layers do not partition the elements");

  // Preorder: strictly lower layer, or a mutually comparable (L) pair.
  p.pre.assign(p.n * p.n, 0);
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (x == y) p.pre[x * p.n + y] = 1;
      else if (p.layer_of[x] < p.layer_of[y]) p.pre[x * p.n + y] = 1;
      else if (p.layer_of[x] == p.layer_of[y] &&
               p.layers[p.layer_of[x]].kind == LayerKind::PairL)
        p.pre[x * p.n + y] = 1;
    }

  // star: negatives go to the nearest positive-bearing layer above, positives
  // to the nearest negative-bearing layer below.
  p.star.assign(p.n, -1);
  p.star[p.unit] = p.unit;
  for (int x = 0; x < p.n; ++x) {
    if (x == p.unit) continue;
    int li = p.layer_of[x];
    if (p.negative(x)) {
      for (int j = li + 1; j < static_cast<int>(p.layers.size()); ++j) {
        const Layer& l = p.layers[j];
        if (l.pos >= 0) {
          p.star[x] = l.pos;
          break;
        }
      }
    } else {
      for (int j = li - 1; j >= 0; --j) {
        const Layer& l = p.layers[j];
        if (l.neg >= 0) {
          p.star[x] = l.neg;
          break;
        }
      }
      if (p.star[x] < 0)
        fail(Errc::InvalidEMP,
             "condition 2: no negative element below positive " + p.labels[x]);
    }
  }
  return p;
}

EMP EMP::from_raw(int n, std::vector<std::string> labels, const std::vector<std::uint8_t>& pre,
                  const std::vector<std::uint8_t>& pos_cone,
                  const std::vector<std::uint8_t>& neg_cone, const std::vector<int>& star,
                  int unit) {
  auto sqle = [&](int x, int y) { return pre[x * n + y] != 0; };
  auto sqlt = [&](int x, int y) { return sqle(x, y) && !sqle(y, x); };
  // preorder sanity
  for (int x = 0; x < n; ++x)
    if (!sqle(x, x)) fail(Errc::InvalidEMP, "preorder not reflexive at " + labels[x]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (sqle(x, y) && sqle(y, z) && !sqle(x, z))
          fail(Errc::InvalidEMP, "preorder not transitive at (" + labels[x] + "," + labels[y] + "," + labels[z] + ")");
  for (int x = 0; x < n; ++x) {
    if (!pos_cone[x] && !neg_cone[x]) fail(Errc::InvalidEMP, "cones do not cover " + labels[x]);
    if (pos_cone[x] && neg_cone[x] && x != unit)
      fail(Errc::InvalidEMP, "cones intersect beyond the unit at " + labels[x]);
  }
  if (!pos_cone[unit] || !neg_cone[unit]) fail(Errc::InvalidEMP, "unit must carry both signs");
  for (int x = 0; x < n; ++x)
    if (x != unit && !sqlt(x, unit))
      fail(Errc::InvalidEMP, "condition 1: unit not the sole maximum above " + labels[x]);
  // cones are chains under the preorder
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool same_cone = (pos_cone[x] && pos_cone[y]) || (neg_cone[x] && neg_cone[y]);
      if (!same_cone) continue;
      if (sqle(x, y) && sqle(y, x)) fail(Errc::InvalidEMP, "cone not antisymmetric at " + labels[x] + "," + labels[y]);
      if (!sqle(x, y) && !sqle(y, x)) fail(Errc::InvalidEMP, "cone not total at " + labels[x] + "," + labels[y]);
    }
  // layeredness: mutually unrelated distinct elements share up/down sets
  auto same_layer = [&](int x, int y) {
    for (int z = 0; z < n; ++z) {
      if (sqlt(z, x) != sqlt(z, y)) return false;
      if (sqlt(x, z) != sqlt(y, z)) return false;
    }
    return true;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || sqlt(x, y) || sqlt(y, x)) continue;
      if ((pos_cone[x] && pos_cone[y]) || (neg_cone[x] && neg_cone[y]))
        fail(Errc::InvalidEMP, "condition 5: same-sign incomparable pair " + labels[x] + "," + labels[y]);
      if (!same_layer(x, y))
        fail(Errc::InvalidEMP, "condition 5: unrelated pair not layered " + labels[x] + "," + labels[y]);
    }
  // star conditions
  for (int x = 0; x < n; ++x) {
    if (x == unit) {
      if (star[x] != unit) fail(Errc::InvalidEMP, "condition 4: unit star must be unit");
      continue;
    }
    if (neg_cone[x]) {
      int best = -1;
      for (int p = 0; p < n; ++p)
        if (pos_cone[p] && sqlt(x, p) && (best < 0 || sqlt(p, best))) best = p;
      if (best != star[x])
        fail(Errc::InvalidEMP, "condition 3: star of " + labels[x] + " must be the least positive above");
    } else {
      int best = -1;
      for (int q = 0; q < n; ++q)
        if (neg_cone[q] && sqlt(q, x) && (best < 0 || sqlt(best, q))) best = q;
      if (best < 0) fail(Errc::InvalidEMP, "condition 4: no negative below positive " + labels[x]);
      if (best != star[x])
        fail(Errc::InvalidEMP, "condition 4: star of " + labels[x] + " must be the largest negative below");
    }
  }
  // recover layers: group by up/down sets, order by the preorder
  std::vector<int> layer_id(n, -1);
  std::vector<std::vector<int>> groups;
  for (int x = 0; x < n; ++x) {
    bool placed = false;
    for (std::size_t g = 0; g < groups.size() && !placed; ++g)
      if (same_layer(x, groups[g][0])) {
        groups[g].push_back(x);
        layer_id[x] = static_cast<int>(g);
        placed = true;
      }
    if (!placed) {
      layer_id[x] = static_cast<int>(groups.size());
      groups.push_back({x});
    }
  }
  std::vector<int> order(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int g, int h) {
    if (g == h) return false;
    return sqlt(groups[g][0], groups[h][0]);
  });
  std::vector<Layer> layers;
  for (int g : order) {
    const auto& grp = groups[g];
    Layer l{};
    if (grp.size() == 1) {
      int x = grp[0];
      if (x == unit) {
        l.kind = LayerKind::Unit;
        l.pos = x;
      } else if (pos_cone[x]) {
        l.kind = LayerKind::Pos;
        l.pos = x;
      } else {
        l.kind = LayerKind::Neg;
        l.neg = x;
      }
    } else if (grp.size() == 2) {
      int a = pos_cone[grp[0]] ? grp[0] : grp[1];
      int b = neg_cone[grp[0]] ? grp[0] : grp[1];
      l.kind = (sqle(a, b) && sqle(b, a)) ? LayerKind::PairL : LayerKind::PairR;
      l.pos = a;
      l.neg = b;
    } else {
      fail(Errc::InvalidEMP, "layer with more than two elements");
    }
    layers.push_back(l);
  }
  EMP p = from_layers(layers, std::move(labels), unit);
  if (p.pre != pre) fail(Errc::InvalidEMP, "preorder is not the one induced by its layers");
  for (int x = 0; x < n; ++x)
    if (p.star[x] != star[x]) fail(Errc::InvalidEMP, "star map mismatch at " + p.labels[x]);
  return p;
}

Report verify_emp(const EMP& p) {
  Report rep;
  try {
    std::vector<std::uint8_t> pos(p.n, 0), neg(p.n, 0);
    for (int x = 0; x < p.n; ++x) {
      pos[x] = p.positive(x);
      neg[x] = p.negative(x);
    }
    EMP::from_raw(p.n, p.labels, p.pre, pos, neg, p.star, p.unit);
    rep.add("enhanced monoidal preorder axioms", true);
  } catch (const Error& e) {
    rep.add("enhanced monoidal preorder axioms", false, e.what());
  }
  return rep;
}

std::optional<CrownType> is_vertical_crown(const EMP& p) {
  // Shape: negative singleton, pair layers, positive singleton, unit.
  const auto& ls = p.layers;
  if (ls.size() < 3) return std::nullopt;
  if (ls.front().kind != LayerKind::Neg) return std::nullopt;
  if (ls.back().kind != LayerKind::Unit) return std::nullopt;
  if (ls[ls.size() - 2].kind != LayerKind::Pos) return std::nullopt;
  CrownType c;
  c.kind = CrownType::Finite;
  for (std::size_t i = 1; i + 2 < ls.size(); ++i) {
    if (ls[i].kind == LayerKind::PairL) c.left_ties.push_back(static_cast<int>(i));
    else if (ls[i].kind != LayerKind::PairR) return std::nullopt;
    ++c.pairs;
  }
  return c;
}

EMP crown_emp(int pairs, const std::vector<int>& left_ties, const std::string& prefix) {
  if (pairs < 0) fail(Errc::BadInput, "crown needs pairs >= 0");
  std::vector<Layer> layers;
  std::vector<std::string> labels;
  auto add = [&](const std::string& s) {
    labels.push_back(prefix + s);
    return static_cast<int>(labels.size()) - 1;
  };
  Layer bottom{LayerKind::Neg, -1, add("b0")};
  layers.push_back(bottom);
  for (int i = 1; i <= pairs; ++i) {
    bool left = std::find(left_ties.begin(), left_ties.end(), i) != left_ties.end();
    Layer l{left ? LayerKind::PairL : LayerKind::PairR, -1, -1};
    l.pos = add("a" + std::to_string(i));
    l.neg = add("b" + std::to_string(i));
    layers.push_back(l);
  }
  Layer top_pos{LayerKind::Pos, add("a" + std::to_string(pairs + 1)), -1};
  layers.push_back(top_pos);
  int unit = add("1");
  layers.push_back(Layer{LayerKind::Unit, unit, -1});
  return EMP::from_layers(layers, std::move(labels), unit);
}

}  // namespace ircl
