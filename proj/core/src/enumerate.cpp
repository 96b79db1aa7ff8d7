#include "ircl/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "ircl/chains.hpp"

namespace ircl {

namespace {

// Layer budgets: singletons cost 1, pairs cost 2. Kind order fixes the
// canonical enumeration order.
constexpr LayerKind kKinds[4] = {LayerKind::Neg, LayerKind::Pos, LayerKind::PairL,
                                 LayerKind::PairR};

FinResLat realize(const std::vector<LayerKind>& kinds) {
  std::vector<Layer> layers;
  std::vector<std::string> labels;
  auto add = [&](const std::string& s) {
    labels.push_back(s);
    return static_cast<int>(labels.size()) - 1;
  };
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    Layer l{kinds[i], -1, -1};
    std::string tag = std::to_string(i + 1);
    switch (kinds[i]) {
      case LayerKind::Neg: l.neg = add("b" + tag); break;
      case LayerKind::Pos: l.pos = add("a" + tag); break;
      case LayerKind::PairL:
      case LayerKind::PairR:
        l.pos = add("a" + tag);
        l.neg = add("b" + tag);
        break;
      case LayerKind::Unit: break;
    }
    layers.push_back(l);
  }
  int unit = add("1");
  layers.push_back(Layer{LayerKind::Unit, unit, -1});
  return from_emp(EMP::from_layers(layers, std::move(labels), unit));
}

void enumerate_layer_seqs(int budget, std::vector<LayerKind>& prefix,
                          const std::function<void(const std::vector<LayerKind>&)>& sink) {
  if (budget == 0) {
    sink(prefix);
    return;
  }
  for (LayerKind k : kKinds) {
    int cost = (k == LayerKind::PairL || k == LayerKind::PairR) ? 2 : 1;
    if (cost > budget) continue;
    prefix.push_back(k);
    enumerate_layer_seqs(budget - cost, prefix, sink);
    prefix.pop_back();
  }
}

void enumerate_chain_seqs(int n, const std::function<void(const std::vector<LayerKind>&)>& sink) {
  if (n < 1) fail(Errc::BadInput, "n >= 1 required");
  if (n == 1) {
    std::vector<LayerKind> empty;
    sink(empty);
    return;
  }
  // bottom layer is forced to be a negative singleton
  std::vector<LayerKind> prefix{LayerKind::Neg};
  enumerate_layer_seqs(n - 2, prefix,
                       [&](const std::vector<LayerKind>& seq) { sink(seq); });
}

}  // namespace

void enumerate_chains(int n, const AlgebraSink& sink) {
  enumerate_chain_seqs(n, [&](const std::vector<LayerKind>& seq) { sink(realize(seq)); });
}

std::vector<FinResLat> enumerate_chains(int n) {
  std::vector<FinResLat> out;
  enumerate_chains(n, [&](const FinResLat& a) { out.push_back(a); });
  return out;
}

void enumerate_star_involutive_chains(int n, const AlgebraSink& sink) {
  enumerate_chain_seqs(n, [&](const std::vector<LayerKind>& seq) {
    // star-involutive iff the stack splits into bodies Neg (Pair)* Pos
    std::size_t i = 0;
    while (i < seq.size()) {
      if (seq[i] != LayerKind::Neg) return;
      ++i;
      while (i < seq.size() && (seq[i] == LayerKind::PairL || seq[i] == LayerKind::PairR)) ++i;
      if (i >= seq.size() || seq[i] != LayerKind::Pos) return;
      ++i;
    }
    sink(realize(seq));
  });
}

void enumerate_quasi_involutive_chains(int n, const AlgebraSink& sink) {
  enumerate_chains(n, [&](const FinResLat& a) {
    if (a.flags().quasi_involutive) sink(a);
  });
}

namespace {

// Assign a block size to every skeleton element (non-central ones stay
// trivial), then every catalog shape of that size, negative elements drawing
// from the distributive catalog.
void assign_blocks(const FinResLat& skel, int extra, int s, std::vector<const BlockShape*>& chosen,
                   const AlgebraSink& sink) {
  if (s == skel.size()) {
    if (extra != 0) return;
    DecompSystem d;
    d.skeleton = skel;
    d.blocks.resize(skel.size());
    for (int i = 0; i < skel.size(); ++i) {
      const BlockShape& shape = *chosen[i];
      DecompBlock b;
      b.order = shape.poset;
      b.top = shape.top;
      b.labels.resize(shape.poset.n);
      for (int e = 0; e < shape.poset.n; ++e)
        b.labels[e] =
            e == shape.top ? skel.label(i) : skel.label(i) + "." + std::to_string(e + 1);
      d.blocks[i] = std::move(b);
    }
    sink(build_algebra(d));
    return;
  }
  bool central = skel.central(s);
  bool negative = skel.leq(s, skel.unit());
  int max_extra = central ? extra : 0;
  for (int add = 0; add <= max_extra; ++add) {
    int m = add + 1;
    if (m > 8) break;
    const auto& catalog = negative ? distributive_catalog(m) : prelattice_catalog(m);
    for (const auto& shape : catalog) {
      chosen[s] = &shape;
      assign_blocks(skel, extra - add, s + 1, chosen, sink);
    }
  }
}

}  // namespace

void enumerate_conic(int n, const AlgebraSink& sink) {
  if (n < 1) fail(Errc::BadInput, "n >= 1 required");
  for (int k = 1; k <= n; ++k) {
    enumerate_quasi_involutive_chains(k, [&](const FinResLat& skel) {
      std::vector<const BlockShape*> chosen(skel.size(), nullptr);
      assign_blocks(skel, n - k, 0, chosen, sink);
    });
  }
}

std::vector<FinResLat> enumerate_conic(int n) {
  std::vector<FinResLat> out;
  enumerate_conic(n, [&](const FinResLat& a) { out.push_back(a); });
  return out;
}

void enumerate_semiconic_fsi(int n, const AlgebraSink& sink) {
  enumerate_conic(n, [&](const FinResLat& a) {
    bool join_irr = true;
    for (int x = 0; x < a.size() && join_irr; ++x)
      for (int y = 0; y < a.size() && join_irr; ++y)
        if (a.join(x, y) == a.unit() && x != a.unit() && y != a.unit()) join_irr = false;
    if (join_irr) sink(a);
  });
}

std::vector<std::uint8_t> canonical_form(const FinResLat& a) {
  if (a.flags().chain && a.flags().idempotent) {
    auto code = to_emp(a).canonical_code();
    code.insert(code.begin(), 0x01);  // chain marker
    return code;
  }
  // minimal (order, mult, unit) byte string over all permutations
  const int n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    std::vector<std::uint8_t> code;
    code.reserve(2 * n * n + 2);
    code.push_back(0x02);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) code.push_back(a.leq(perm[i], perm[j]) ? 1 : 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        code.push_back(static_cast<std::uint8_t>(pos[a.mult(perm[i], perm[j])]));
    code.push_back(static_cast<std::uint8_t>(pos[a.unit()]));
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace ircl
