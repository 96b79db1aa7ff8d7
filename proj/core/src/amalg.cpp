#include "ircl/amalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "ircl/chains.hpp"
#include "ircl/congr.hpp"
#include "ircl/enumerate.hpp"
#include "ircl/parallel.hpp"

namespace ircl {

// ---------------------------------------------------------------------------
// V-formations

VFormation VFormation::reduced(FinResLat a, FinResLat b, FinResLat c) {
  VFormation v;
  v.A = std::move(a);
  v.B = std::move(b);
  v.C = std::move(c);
  std::string w;
  if (!is_subalgebra_of(v.A, v.B, &w)) fail(Errc::BadInput, "A is not a subalgebra of B: " + w);
  if (!is_subalgebra_of(v.A, v.C, &w)) fail(Errc::BadInput, "A is not a subalgebra of C: " + w);
  v.fB.resize(v.A.size());
  v.fC.resize(v.A.size());
  for (int i = 0; i < v.A.size(); ++i) {
    v.fB[i] = v.B.index_of(v.A.label(i));
    v.fC[i] = v.C.index_of(v.A.label(i));
  }
  if (!v.is_reduced(&w)) fail(Errc::NotReduced, w);
  return v;
}

bool VFormation::is_reduced(std::string* witness) const {
  for (int i = 0; i < A.size(); ++i) {
    if (fB[i] < 0 || B.label(fB[i]) != A.label(i) || fC[i] < 0 || C.label(fC[i]) != A.label(i)) {
      if (witness) *witness = "embeddings are not label inclusions at " + A.label(i);
      return false;
    }
  }
  for (int x = 0; x < B.size(); ++x) {
    int shared = C.index_of(B.label(x));
    if (shared >= 0 && A.index_of(B.label(x)) < 0) {
      if (witness) *witness = "B and C share " + B.label(x) + " outside A";
      return false;
    }
  }
  return true;
}

VFormation VFormation::reduce() const {
  // verify the given maps are embeddings before relabeling
  auto check_embedding = [&](const FinResLat& tgt, const std::vector<int>& f, const char* leg) {
    std::set<int> img;
    for (int i = 0; i < A.size(); ++i) {
      if (f[i] < 0 || f[i] >= tgt.size() || !img.insert(f[i]).second)
        fail(Errc::BadInput, std::string(leg) + " is not injective");
    }
    if (f[A.unit()] != tgt.unit()) fail(Errc::BadInput, std::string(leg) + " does not fix the unit");
    for (int i = 0; i < A.size(); ++i)
      for (int j = 0; j < A.size(); ++j) {
        bool ok = tgt.meet(f[i], f[j]) == f[A.meet(i, j)] && tgt.join(f[i], f[j]) == f[A.join(i, j)] &&
                  tgt.mult(f[i], f[j]) == f[A.mult(i, j)] && tgt.ld(f[i], f[j]) == f[A.ld(i, j)] &&
                  tgt.rd(f[i], f[j]) == f[A.rd(i, j)];
        if (!ok) fail(Errc::BadInput, std::string(leg) + " is not a homomorphism");
      }
  };
  check_embedding(B, fB, "fB");
  check_embedding(C, fC, "fC");

  // rebuild A and C over B's labels; rename C's elements outside the image
  std::vector<std::string> a_labels(A.size());
  for (int i = 0; i < A.size(); ++i) a_labels[i] = B.label(fB[i]);
  FinResLat a2 = FinResLat::build_on_poset(a_labels, A.order(),
                                           [&] {
                                             std::vector<std::uint8_t> m(A.size() * A.size());
                                             for (int i = 0; i < A.size(); ++i)
                                               for (int j = 0; j < A.size(); ++j)
                                                 m[i * A.size() + j] =
                                                     static_cast<std::uint8_t>(A.mult(i, j));
                                             return m;
                                           }(),
                                           A.unit());
  std::vector<std::string> c_labels(C.size());
  std::vector<int> from_a(C.size(), -1);
  for (int i = 0; i < A.size(); ++i) from_a[fC[i]] = i;
  for (int j = 0; j < C.size(); ++j) {
    if (from_a[j] >= 0) {
      c_labels[j] = a_labels[from_a[j]];
    } else {
      std::string base = C.label(j);
      while (B.index_of(base) >= 0 ||
             std::count(c_labels.begin(), c_labels.end(), base) > 0)
        base += "'";
      c_labels[j] = base;
    }
  }
  FinResLat c2 = FinResLat::build_on_poset(c_labels, C.order(),
                                           [&] {
                                             std::vector<std::uint8_t> m(C.size() * C.size());
                                             for (int i = 0; i < C.size(); ++i)
                                               for (int j = 0; j < C.size(); ++j)
                                                 m[i * C.size() + j] =
                                                     static_cast<std::uint8_t>(C.mult(i, j));
                                             return m;
                                           }(),
                                           C.unit());
  return reduced(std::move(a2), B, std::move(c2));
}

VFormation v_formation_by_labels(FinResLat a, FinResLat b, FinResLat c) {
  VFormation raw;
  raw.A = std::move(a);
  raw.B = std::move(b);
  raw.C = std::move(c);
  raw.fB.resize(raw.A.size());
  raw.fC.resize(raw.A.size());
  for (int i = 0; i < raw.A.size(); ++i) {
    raw.fB[i] = raw.B.index_of(raw.A.label(i));
    raw.fC[i] = raw.C.index_of(raw.A.label(i));
    if (raw.fB[i] < 0) fail(Errc::BadInput, raw.A.label(i) + " missing in B");
    if (raw.fC[i] < 0) fail(Errc::BadInput, raw.A.label(i) + " missing in C");
  }
  return raw.reduce();
}

// ---------------------------------------------------------------------------
// Certificate verification

Report verify_amalgam(const VFormation& v, const AmalgamCert& cert, bool one_sided) {
  Report rep;
  const FinResLat& d = cert.D;
  auto check_map = [&](const FinResLat& src, const std::vector<int>& g, bool need_injective,
                       const char* name) {
    if (static_cast<int>(g.size()) != src.size()) {
      rep.add(std::string(name) + " well-defined", false, "size mismatch");
      return;
    }
    for (int x : g)
      if (x < 0 || x >= d.size()) {
        rep.add(std::string(name) + " well-defined", false, "index out of range");
        return;
      }
    rep.add(std::string(name) + " well-defined", true);
    if (need_injective) {
      std::set<int> img(g.begin(), g.end());
      rep.add(std::string(name) + " injective", img.size() == g.size());
    }
    bool hom = g[src.unit()] == d.unit();
    std::string w = hom ? "" : "unit not preserved";
    for (int x = 0; x < src.size() && hom; ++x)
      for (int y = 0; y < src.size() && hom; ++y) {
        bool ok = d.meet(g[x], g[y]) == g[src.meet(x, y)] && d.join(g[x], g[y]) == g[src.join(x, y)] &&
                  d.mult(g[x], g[y]) == g[src.mult(x, y)] && d.ld(g[x], g[y]) == g[src.ld(x, y)] &&
                  d.rd(g[x], g[y]) == g[src.rd(x, y)];
        if (!ok) {
          hom = false;
          w = "operation not preserved at " + src.tuple({x, y});
        }
      }
    rep.add(std::string(name) + " homomorphism", hom, w);
  };
  check_map(v.B, cert.gB, !one_sided, "gB");
  check_map(v.C, cert.gC, true, "gC");
  if (!rep.ok()) return rep;

  bool commutes = true;
  std::string w;
  for (int a = 0; a < v.A.size() && commutes; ++a)
    if (cert.gB[v.fB[a]] != cert.gC[v.fC[a]]) {
      commutes = false;
      w = "square fails at " + v.A.label(a);
    }
  rep.add("gB o fB = gC o fC", commutes, w);

  bool strong = amalgam_is_strong(v, cert);
  if (cert.strong)
    rep.add("strong intersection", strong, strong ? "" : "images meet outside A");
  else
    rep.add("strong intersection (informational)", true, strong ? "holds" : "does not hold");
  return rep;
}

bool amalgam_is_strong(const VFormation& v, const AmalgamCert& cert) {
  std::set<int> imgB(cert.gB.begin(), cert.gB.end());
  std::set<int> imgC(cert.gC.begin(), cert.gC.end());
  std::set<int> imgA;
  for (int a = 0; a < v.A.size(); ++a) imgA.insert(cert.gB[v.fB[a]]);
  std::set<int> inter;
  std::set_intersection(imgB.begin(), imgB.end(), imgC.begin(), imgC.end(),
                        std::inserter(inter, inter.begin()));
  return inter == imgA;
}

// ---------------------------------------------------------------------------
// Strong amalgamation of star-involutive chains

namespace {

struct CrownPiece {
  std::vector<std::string> labels;  // element labels of the one-generated piece
  EMP emp;                          // the piece together with 1
  int anchor = -1;                  // index into A's crown list, -1 if private
};

std::vector<CrownPiece> crown_pieces(const FinResLat& x) {
  std::vector<CrownPiece> out;
  for (const auto& c : crown_decomposition(x).crowns) {
    CrownPiece p;
    std::uint64_t mask = 1ull << x.unit();
    for (int e : c.elements) {
      p.labels.push_back(x.label(e));
      mask |= 1ull << e;
    }
    p.emp = to_emp(induced_subalgebra(x, mask).algebra);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

AmalgamCert amalgamate_star_inv_chains(const VFormation& v, bool mirror) {
  std::string w;
  if (!v.is_reduced(&w)) fail(Errc::NotReduced, w);
  for (const FinResLat* x : {&v.A, &v.B, &v.C}) {
    if (!is_chain(*x, &w)) fail(Errc::NotAChain, "witness " + w);
    if (!is_star_involutive(*x, &w)) fail(Errc::NotStarInvolutive, "witness " + w);
    if (!is_idempotent(*x, &w)) fail(Errc::NotIdempotent, "witness " + w);
  }
  auto pieces_a = crown_pieces(v.A);
  auto pieces_b = crown_pieces(v.B);
  auto pieces_c = crown_pieces(v.C);
  auto mark_anchors = [&](std::vector<CrownPiece>& pieces, const char* leg) {
    std::vector<int> order;
    for (auto& p : pieces)
      for (std::size_t ai = 0; ai < pieces_a.size(); ++ai)
        if (std::set<std::string>(p.labels.begin(), p.labels.end()) ==
            std::set<std::string>(pieces_a[ai].labels.begin(), pieces_a[ai].labels.end())) {
          p.anchor = static_cast<int>(ai);
          order.push_back(p.anchor);
        }
    // every A-crown must appear, in A's order
    if (order.size() != pieces_a.size() || !std::is_sorted(order.begin(), order.end()))
      fail(Errc::Internal, std::string("crowns of A are not aligned inside ") + leg);
    // no A-element may sit in a private crown
    for (const auto& p : pieces)
      if (p.anchor < 0)
        for (const auto& l : p.labels)
          if (v.A.index_of(l) >= 0)
            fail(Errc::Internal, std::string("crown of ") + leg + " cuts through A at " + l);
  };
  mark_anchors(pieces_b, "B");
  mark_anchors(pieces_c, "C");

  // deterministic merge: per gap between consecutive anchors, first leg's
  // private crowns then second leg's, each in native order
  const auto& first = mirror ? pieces_c : pieces_b;
  const auto& second = mirror ? pieces_b : pieces_c;
  std::vector<const CrownPiece*> merged;
  int gaps = static_cast<int>(pieces_a.size()) + 1;
  for (int gap = 0; gap < gaps; ++gap) {
    auto in_gap = [&](const CrownPiece& p, const std::vector<CrownPiece>& all) {
      if (p.anchor >= 0) return false;
      // the gap of a private crown = number of anchors strictly below it
      int below = 0;
      for (const auto& q : all) {
        if (&q == &p) break;
        if (q.anchor >= 0) ++below;
      }
      return below == gap;
    };
    for (const auto& p : first)
      if (in_gap(p, first)) merged.push_back(&p);
    for (const auto& p : second)
      if (in_gap(p, second)) merged.push_back(&p);
    if (gap < static_cast<int>(pieces_a.size())) {
      for (const auto& p : pieces_b)
        if (p.anchor == gap) merged.push_back(&p);
    }
  }
  std::vector<EMP> summands;
  for (const CrownPiece* p : merged) summands.push_back(p->emp);
  FinResLat d = summands.empty() ? FinResLat::trivial() : from_emp(nested_sum_emp(summands));

  AmalgamCert cert;
  cert.D = std::move(d);
  cert.strong = true;
  cert.gB.resize(v.B.size());
  cert.gC.resize(v.C.size());
  for (int x = 0; x < v.B.size(); ++x) cert.gB[x] = cert.D.index_of(v.B.label(x));
  for (int x = 0; x < v.C.size(); ++x) cert.gC[x] = cert.D.index_of(v.C.label(x));
  Report rep = verify_amalgam(v, cert);
  if (!rep.ok()) fail(Errc::Internal, "chain amalgam fails verification:\n" + rep.to_string());
  if (cert.D.size() != v.B.size() + v.C.size() - v.A.size())
    fail(Errc::Internal, "chain amalgam has unexpected size");
  if (!cert.D.flags().star_involutive) fail(Errc::Internal, "chain amalgam not star-involutive");
  return cert;
}

// ---------------------------------------------------------------------------
// Certified block amalgams

int LabeledPoset::index_of(const std::string& l) const {
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i] == l) return i;
  return -1;
}

namespace {

// Does g embed src into dst as a topped (pre)lattice block of the given kind,
// preserving order both ways, joins, ambient meets, and implication when
// Brouwerian?
bool block_embedding_ok(BlockAmalgKind kind, const Poset& src, int src_top, const Poset& dst,
                        int dst_top, const std::vector<int>& g) {
  for (int i = 0; i < src.n; ++i)
    for (int j = 0; j < src.n; ++j) {
      if (i != j && g[i] == g[j]) return false;
      if (src.leq(i, j) != dst.leq(g[i], g[j])) return false;
    }
  if (g[src_top] != dst_top) return false;
  for (int i = 0; i < src.n; ++i)
    for (int j = 0; j < src.n; ++j) {
      auto js = src.join(i, j);
      auto jd = dst.join(g[i], g[j]);
      if (!js || !jd || g[*js] != *jd) return false;
      auto md = dst.meet(g[i], g[j]);
      if (md) {
        auto ms = src.meet(i, j);
        if (!ms || g[*ms] != *md) return false;
      }
      if (kind == BlockAmalgKind::Brouwerian) {
        auto rs = src.rel_pseudocomplement(i, j);
        auto rd = dst.rel_pseudocomplement(g[i], g[j]);
        if (!rs || !rd || g[*rs] != *rd) return false;
      }
    }
  return true;
}

bool block_valid_for_kind(BlockAmalgKind kind, const Poset& p) {
  switch (kind) {
    case BlockAmalgKind::Lattice: return p.is_lattice();
    case BlockAmalgKind::Brouwerian: return p.is_brouwerian();
    case BlockAmalgKind::DistributiveLattice: return p.is_distributive_lattice();
  }
  return false;
}

// All embeddings of src into dst extending the pinned partial map, in
// lexicographic order of images.
void enumerate_block_embeddings(BlockAmalgKind kind, const Poset& src, int src_top,
                                const Poset& dst, int dst_top, std::vector<int>& g, int next,
                                const std::function<bool(const std::vector<int>&)>& sink) {
  if (next == src.n) {
    if (block_embedding_ok(kind, src, src_top, dst, dst_top, g)) {
      if (sink(g)) return;
    }
    return;
  }
  if (g[next] >= 0) {
    enumerate_block_embeddings(kind, src, src_top, dst, dst_top, g, next + 1, sink);
    return;
  }
  for (int t = 0; t < dst.n; ++t) {
    bool ok = (next != src_top || t == dst_top);
    for (int j = 0; j < next && ok; ++j)
      if (g[j] >= 0) {
        if (g[j] == t) ok = false;
        else if (src.leq(next, j) != dst.leq(t, g[j]) || src.leq(j, next) != dst.leq(g[j], t))
          ok = false;
      }
    if (!ok) continue;
    g[next] = t;
    enumerate_block_embeddings(kind, src, src_top, dst, dst_top, g, next + 1, sink);
    g[next] = -1;
  }
}

struct PushoutResult {
  bool valid = false;
  LabeledPoset poset;
  std::vector<int> from_b, from_c;
};

PushoutResult block_pushout(const LabeledPoset& bs, const LabeledPoset& cs,
                            const LabeledPoset& as) {
  PushoutResult out;
  out.poset.labels = bs.labels;
  out.from_b.resize(bs.labels.size());
  for (int i = 0; i < static_cast<int>(bs.labels.size()); ++i) out.from_b[i] = i;
  out.from_c.assign(cs.labels.size(), -1);
  for (int j = 0; j < static_cast<int>(cs.labels.size()); ++j) {
    int shared = out.poset.labels.size();
    int in_b = bs.index_of(cs.labels[j]);
    if (in_b >= 0) {
      out.from_c[j] = in_b;
    } else {
      out.from_c[j] = shared;
      out.poset.labels.push_back(cs.labels[j]);
    }
  }
  int n = static_cast<int>(out.poset.labels.size());
  if (n > 30) return out;  // keep the completion small
  std::vector<std::uint8_t> leq(n * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (int i = 0; i < static_cast<int>(bs.labels.size()); ++i)
    for (int j = 0; j < static_cast<int>(bs.labels.size()); ++j)
      if (bs.order.leq(i, j)) leq[out.from_b[i] * n + out.from_b[j]] = 1;
  for (int i = 0; i < static_cast<int>(cs.labels.size()); ++i)
    for (int j = 0; j < static_cast<int>(cs.labels.size()); ++j)
      if (cs.order.leq(i, j)) leq[out.from_c[i] * n + out.from_c[j]] = 1;
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i * n + j] && leq[j * n + i]) return out;  // collapsed
  out.poset.order = Poset::from_leq(n, leq);
  out.poset.top = out.from_b[bs.top];
  out.valid = true;
  (void)as;
  return out;
}

}  // namespace

BlockAmalgamResult block_amalgam(BlockAmalgKind kind, const LabeledPoset& bs,
                                 const LabeledPoset& cs, const LabeledPoset& as, int size_bound) {
  // sanity: A is a common part, by labels
  for (const auto& l : as.labels)
    if (bs.index_of(l) < 0 || cs.index_of(l) < 0)
      fail(Errc::BadInput, "block amalgam: " + l + " not common");
  if (bs.labels[bs.top] != cs.labels[cs.top] || as.labels[as.top] != bs.labels[bs.top])
    fail(Errc::BadInput, "block amalgam: tops differ");
  for (const auto& l : bs.labels)
    if (cs.index_of(l) >= 0 && as.index_of(l) < 0)
      fail(Errc::BadInput, "block amalgam: inputs share " + l + " outside the common part");

  const bool need_strong = kind != BlockAmalgKind::DistributiveLattice;
  auto certify = [&](const LabeledPoset& d, const std::vector<int>& from_b,
                     const std::vector<int>& from_c) -> bool {
    if (static_cast<int>(d.labels.size()) > size_bound) return false;
    if (!block_valid_for_kind(kind, d.order)) return false;
    if (!block_embedding_ok(kind, bs.order, bs.top, d.order, d.top, from_b)) return false;
    if (!block_embedding_ok(kind, cs.order, cs.top, d.order, d.top, from_c)) return false;
    for (int i = 0; i < static_cast<int>(as.labels.size()); ++i)
      if (from_b[bs.index_of(as.labels[i])] != from_c[cs.index_of(as.labels[i])]) return false;
    if (need_strong) {
      std::set<int> ib(from_b.begin(), from_b.end());
      std::set<int> ic(from_c.begin(), from_c.end());
      std::set<int> inter;
      std::set_intersection(ib.begin(), ib.end(), ic.begin(), ic.end(),
                            std::inserter(inter, inter.begin()));
      if (static_cast<int>(inter.size()) != static_cast<int>(as.labels.size())) return false;
    }
    return true;
  };

  PushoutResult push = block_pushout(bs, cs, as);
  if (push.valid && certify(push.poset, push.from_b, push.from_c))
    return {push.poset, push.from_b, push.from_c};

  if (push.valid) {
    // canonical second attempt: the Dedekind-MacNeille completion
    std::vector<int> embed;
    Poset comp = dedekind_macneille(push.poset.order, embed);
    LabeledPoset d;
    d.order = comp;
    d.labels.assign(comp.n, "");
    for (int i = 0; i < static_cast<int>(push.poset.labels.size()); ++i)
      d.labels[embed[i]] = push.poset.labels[i];
    int fresh = 0;
    for (int i = 0; i < comp.n; ++i)
      if (d.labels[i].empty())
        d.labels[i] = push.poset.labels[push.poset.top] + "~" + std::to_string(++fresh);
    d.top = embed[push.poset.top];
    std::vector<int> from_b(bs.labels.size()), from_c(cs.labels.size());
    for (int i = 0; i < static_cast<int>(bs.labels.size()); ++i) from_b[i] = embed[push.from_b[i]];
    for (int i = 0; i < static_cast<int>(cs.labels.size()); ++i) from_c[i] = embed[push.from_c[i]];
    if (certify(d, from_b, from_c)) return {d, from_b, from_c};
  }

  // bounded catalog search, canonical order
  int min_size = need_strong ? static_cast<int>(bs.labels.size() + cs.labels.size() - as.labels.size())
                             : static_cast<int>(std::max(bs.labels.size(), cs.labels.size()));
  for (int m = std::max(1, min_size); m <= std::min(size_bound, 8); ++m) {
    const auto& catalog = kind == BlockAmalgKind::Lattice ? prelattice_catalog(m)
                                                          : distributive_catalog(m);
    for (const auto& shape : catalog) {
      if (kind == BlockAmalgKind::Lattice && !shape.lattice) continue;
      BlockAmalgamResult found;
      bool done = false;
      std::vector<int> gb(bs.labels.size(), -1);
      enumerate_block_embeddings(kind, bs.order, bs.top, shape.poset, shape.top, gb, 0,
                                 [&](const std::vector<int>& fb) {
        std::vector<int> gc(cs.labels.size(), -1);
        for (int i = 0; i < static_cast<int>(as.labels.size()); ++i)
          gc[cs.index_of(as.labels[i])] = fb[bs.index_of(as.labels[i])];
        enumerate_block_embeddings(kind, cs.order, cs.top, shape.poset, shape.top, gc, 0,
                                   [&](const std::vector<int>& fc) {
          LabeledPoset d;
          d.order = shape.poset;
          d.top = shape.top;
          d.labels.assign(shape.poset.n, "");
          for (int i = 0; i < static_cast<int>(bs.labels.size()); ++i) d.labels[fb[i]] = bs.labels[i];
          for (int i = 0; i < static_cast<int>(cs.labels.size()); ++i) d.labels[fc[i]] = cs.labels[i];
          int fresh = 0;
          for (int i = 0; i < shape.poset.n; ++i)
            if (d.labels[i].empty())
              d.labels[i] = bs.labels[bs.top] + "~" + std::to_string(++fresh);
          if (certify(d, fb, fc)) {
            found = {d, fb, fc};
            done = true;
          }
          return done;
        });
        return done;
      });
      if (done) return found;
    }
  }
  fail(Errc::BoundExceeded,
       "no certified block amalgam within size " + std::to_string(size_bound));
}

// ---------------------------------------------------------------------------
// Strong amalgamation of rigid conjunctive conic algebras

namespace {

LabeledPoset block_as_labeled(const DecompBlock& b) {
  return {b.order, b.labels, b.top};
}

DecompBlock labeled_as_block(const LabeledPoset& p) {
  DecompBlock b;
  b.order = p.order;
  b.labels = p.labels;
  b.top = p.top;
  return b;
}

}  // namespace

AmalgamCert amalgamate_rigid_conjunctive_conic(const VFormation& v, int block_bound, bool mirror) {
  std::string w;
  if (!v.is_reduced(&w)) fail(Errc::NotReduced, w);
  for (const FinResLat* x : {&v.A, &v.B, &v.C}) {
    require_conic_idempotent(*x);
    if (!is_rigid(*x, &w)) fail(Errc::NotRigid, "witness " + w);
    if (!is_conjunctive(*x, &w)) fail(Errc::NotConjunctive, "witness " + w);
  }
  DecompSystem sys_a = extract_system(v.A);
  DecompSystem sys_b = extract_system(v.B);
  DecompSystem sys_c = extract_system(v.C);

  VFormation skel_v = VFormation::reduced(sys_a.skeleton, sys_b.skeleton, sys_c.skeleton);
  AmalgamCert skel_cert = amalgamate_star_inv_chains(skel_v, mirror);
  const FinResLat& sd = skel_cert.D;

  DecompSystem sys_d;
  sys_d.skeleton = sd;
  sys_d.blocks.resize(sd.size());
  for (int s = 0; s < sd.size(); ++s) {
    const std::string& lbl = sd.label(s);
    int in_a = sys_a.skeleton.index_of(lbl);
    int in_b = sys_b.skeleton.index_of(lbl);
    int in_c = sys_c.skeleton.index_of(lbl);
    if (in_a >= 0) {
      BlockAmalgKind kind = sd.leq(s, sd.unit()) ? BlockAmalgKind::Brouwerian
                                                 : BlockAmalgKind::Lattice;
      auto res = block_amalgam(kind, block_as_labeled(sys_b.blocks[in_b]),
                               block_as_labeled(sys_c.blocks[in_c]),
                               block_as_labeled(sys_a.blocks[in_a]), block_bound);
      sys_d.blocks[s] = labeled_as_block(res.block);
    } else if (in_b >= 0) {
      sys_d.blocks[s] = sys_b.blocks[in_b];
    } else if (in_c >= 0) {
      sys_d.blocks[s] = sys_c.blocks[in_c];
    } else {
      fail(Errc::Internal, "skeleton element " + lbl + " from nowhere");
    }
  }
  AmalgamCert cert;
  cert.D = build_algebra(sys_d);
  cert.strong = true;
  cert.gB.resize(v.B.size());
  cert.gC.resize(v.C.size());
  for (int x = 0; x < v.B.size(); ++x) cert.gB[x] = cert.D.index_of(v.B.label(x));
  for (int x = 0; x < v.C.size(); ++x) cert.gC[x] = cert.D.index_of(v.C.label(x));
  Report rep = verify_amalgam(v, cert);
  if (!rep.ok()) fail(Errc::Internal, "conic amalgam fails verification:\n" + rep.to_string());
  if (!is_rigid(cert.D, &w)) fail(Errc::Internal, "amalgam lost rigidity: " + w);
  if (!is_conjunctive(cert.D, &w)) fail(Errc::Internal, "amalgam lost conjunctivity: " + w);
  if (v.B.flags().commutative && v.C.flags().commutative && !cert.D.flags().commutative)
    fail(Errc::Internal, "amalgam lost commutativity");
  return cert;
}

// ---------------------------------------------------------------------------
// Bounded exhaustive amalgam search

namespace {

bool chain_hom_ok(const FinResLat& src, const FinResLat& dst, const std::vector<int>& g) {
  if (g[src.unit()] != dst.unit()) return false;
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < src.size(); ++y) {
      if (src.leq(x, y) != dst.leq(g[x], g[y])) return false;
      if (dst.mult(g[x], g[y]) != g[src.mult(x, y)]) return false;
      if (dst.ld(g[x], g[y]) != g[src.ld(x, y)]) return false;
      if (dst.rd(g[x], g[y]) != g[src.rd(x, y)]) return false;
    }
  return true;
}

// All embeddings of one chain into another extending pins; sink returning
// true stops the enumeration.
bool chain_embeddings(const FinResLat& src, const FinResLat& dst, const std::vector<int>& pins,
                      const std::function<bool(const std::vector<int>&)>& sink) {
  auto by_rank = [](const FinResLat& x) {
    std::vector<int> rank(x.size(), 0), out(x.size());
    for (int i = 0; i < x.size(); ++i)
      for (int j = 0; j < x.size(); ++j)
        if (x.lt(j, i)) ++rank[i];
    for (int i = 0; i < x.size(); ++i) out[rank[i]] = i;
    return out;
  };
  std::vector<int> src_sorted = by_rank(src);
  std::vector<int> dst_sorted = by_rank(dst);
  std::vector<int> g(src.size(), -1);
  // operations against already-assigned elements must agree as soon as both
  // operands and the value are placed
  auto compatible = [&](int e) {
    for (int j = 0; j < src.size(); ++j) {
      if (g[j] < 0) continue;
      int pairs[2][2] = {{e, j}, {j, e}};
      for (auto& pr : pairs) {
        int m = src.mult(pr[0], pr[1]);
        if (g[m] >= 0 && dst.mult(g[pr[0]], g[pr[1]]) != g[m]) return false;
        int l = src.ld(pr[0], pr[1]);
        if (g[l] >= 0 && dst.ld(g[pr[0]], g[pr[1]]) != g[l]) return false;
        int r = src.rd(pr[0], pr[1]);
        if (g[r] >= 0 && dst.rd(g[pr[0]], g[pr[1]]) != g[r]) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int idx, int min_pos) -> bool {
    if (idx == src.size()) {
      if (chain_hom_ok(src, dst, g)) return sink(g);
      return false;
    }
    int e = src_sorted[idx];
    for (int t = min_pos; t < dst.size(); ++t) {
      int target = dst_sorted[t];
      if (pins[e] >= 0 && pins[e] != target) continue;
      if ((e == src.unit()) != (target == dst.unit())) continue;
      g[e] = target;
      if (compatible(e) && self(self, idx + 1, t + 1)) return true;
      g[e] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

// quotient candidates for the one-sided leg: class maps that keep the image
// of A injective, paired with the quotient algebra
struct LegQuotient {
  std::vector<int> qmap;  // B element -> quotient element
  FinResLat alg;
};

std::vector<LegQuotient> leg_quotients(const VFormation& v, bool one_sided) {
  std::vector<LegQuotient> out;
  if (!one_sided) {
    LegQuotient id;
    id.qmap.resize(v.B.size());
    for (int i = 0; i < v.B.size(); ++i) id.qmap[i] = i;
    id.alg = v.B;
    out.push_back(std::move(id));
    return out;
  }
  for (const auto& th : enumerate_congruences(v.B)) {
    std::set<int> a_classes;
    bool inj = true;
    for (int a = 0; a < v.A.size() && inj; ++a)
      if (!a_classes.insert(th.cls[v.fB[a]]).second) inj = false;
    if (!inj) continue;
    LegQuotient q;
    q.qmap = th.cls;
    q.alg = quotient(v.B, th);
    out.push_back(std::move(q));
  }
  return out;
}

// Tries every amalgam structure over a fixed candidate D; fills cert on the
// first success, in deterministic inner order.
bool try_candidate_chain(const VFormation& v, const std::vector<LegQuotient>& quotients,
                         const FinResLat& d, bool one_sided, AmalgamCert& out) {
  std::vector<int> no_pins_c(v.C.size(), -1);
  bool hit = false;
  chain_embeddings(v.C, d, no_pins_c, [&](const std::vector<int>& gc) {
    for (const auto& q : quotients) {
      std::vector<int> pins(q.alg.size(), -1);
      bool consistent = true;
      for (int a = 0; a < v.A.size() && consistent; ++a) {
        int& slot = pins[q.qmap[v.fB[a]]];
        int want = gc[v.fC[a]];
        if (slot >= 0 && slot != want) consistent = false;
        slot = want;
      }
      if (!consistent) continue;
      bool stop = chain_embeddings(q.alg, d, pins, [&](const std::vector<int>& e) {
        AmalgamCert cert;
        cert.D = d;
        cert.gC = gc;
        cert.gB.resize(v.B.size());
        for (int x = 0; x < v.B.size(); ++x) cert.gB[x] = e[q.qmap[x]];
        Report rep = verify_amalgam(v, cert, one_sided);
        if (!rep.ok()) return false;
        cert.strong = amalgam_is_strong(v, cert);
        out = std::move(cert);
        hit = true;
        return true;
      });
      if (stop) return true;
    }
    return false;
  });
  return hit;
}

std::optional<AmalgamCert> search_chains(const VFormation& v, int bound, bool star_inv,
                                         bool one_sided) {
  if (!v.C.flags().chain || !v.C.flags().idempotent) return std::nullopt;
  auto quotients = leg_quotients(v, one_sided);
  std::erase_if(quotients, [](const LegQuotient& q) {
    return !q.alg.flags().chain || !q.alg.flags().idempotent;
  });
  if (quotients.empty()) return std::nullopt;
  for (int n = std::max(v.C.size(), 1); n <= bound; ++n) {
    std::vector<FinResLat> candidates;
    auto take = [&](const FinResLat& d) { candidates.push_back(d); };
    if (star_inv)
      enumerate_star_involutive_chains(n, take);
    else
      enumerate_chains(n, take);
    std::vector<AmalgamCert> slots(candidates.size());
    int hit = parallel_first_hit(static_cast<int>(candidates.size()), [&](int i) {
      return try_candidate_chain(v, quotients, candidates[i], one_sided, slots[i]);
    });
    if (hit >= 0) return slots[hit];
  }
  return std::nullopt;
}

// ---- systems-driven search among conic algebras -----------------------------

struct LegSystem {
  std::vector<int> qmap;
  FinResLat alg;
  DecompSystem sys;
  std::vector<int> spot_of;       // element -> skeleton index in sys
  std::vector<int> pos_in_block;  // element -> position inside its block
};

LegSystem make_leg(const std::vector<int>& qmap, const FinResLat& alg) {
  LegSystem leg;
  leg.qmap = qmap;
  leg.alg = alg;
  leg.sys = extract_system(alg);
  leg.spot_of.assign(alg.size(), -1);
  leg.pos_in_block.assign(alg.size(), -1);
  for (int s = 0; s < leg.sys.skeleton.size(); ++s)
    for (int p = 0; p < static_cast<int>(leg.sys.blocks[s].labels.size()); ++p) {
      int e = alg.index_of(leg.sys.blocks[s].labels[p]);
      leg.spot_of[e] = s;
      leg.pos_in_block[e] = p;
    }
  return leg;
}

struct SpotCandidate {
  const BlockShape* shape;
  std::vector<int> fb, fc;  // block embeddings; empty when that leg is absent
};

// Closure of the embedded images under join, defined meet, and (negative
// spots) relative pseudocomplement must exhaust the candidate block.
bool spot_generated(const Poset& p, int top, bool negative, std::uint64_t image) {
  std::uint64_t cur = image | (1ull << top);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < p.n; ++i) {
      if (!((cur >> i) & 1u)) continue;
      for (int j = 0; j < p.n; ++j) {
        if (!((cur >> j) & 1u)) continue;
        std::vector<int> vals;
        if (auto v = p.join(i, j)) vals.push_back(*v);
        if (auto v = p.meet(i, j)) vals.push_back(*v);
        if (negative)
          if (auto v = p.rel_pseudocomplement(i, j)) vals.push_back(*v);
        for (int val : vals)
          if (!((cur >> val) & 1u)) {
            cur |= 1ull << val;
            changed = true;
          }
      }
    }
  }
  return cur == (p.n == 64 ? ~0ull : (1ull << p.n) - 1);
}

struct SpotProblem {
  const DecompBlock* bblk = nullptr;
  const DecompBlock* cblk = nullptr;
  std::vector<std::pair<int, int>> pins;  // (pos in bblk, pos in cblk) equal
  bool negative = false;
  bool central = true;
  bool fsi_unit = false;
  int min_size = 1;
};

std::vector<SpotCandidate> spot_candidates(const SpotProblem& sp, int max_size) {
  std::vector<SpotCandidate> out;
  int bsz = sp.bblk ? static_cast<int>(sp.bblk->labels.size()) : 0;
  int csz = sp.cblk ? static_cast<int>(sp.cblk->labels.size()) : 0;
  if (!sp.central && (bsz > 1 || csz > 1)) return out;  // non-central spots are trivial
  int lower = std::max({1, bsz, csz, sp.min_size});
  if (!sp.central || (bsz <= 1 && csz <= 1)) {
    // only the generated singleton can appear here
    if (max_size < 1) return out;
    static const BlockShape point{Poset::antichain(1), 0, true, true};
    SpotCandidate c;
    c.shape = &point;
    if (sp.bblk) c.fb = {0};
    if (sp.cblk) c.fc = {0};
    out.push_back(std::move(c));
    return out;
  }
  for (int m = lower; m <= std::min(max_size, 8); ++m) {
    const auto& catalog = sp.negative ? distributive_catalog(m) : prelattice_catalog(m);
    for (const auto& shape : catalog) {
      if (sp.fsi_unit) {
        // top must be join-irreducible inside the block
        bool ji = true;
        for (int i = 0; i < shape.poset.n && ji; ++i)
          for (int j = 0; j < shape.poset.n && ji; ++j)
            if (i != shape.top && j != shape.top && shape.poset.join(i, j) == std::optional<int>(shape.top))
              ji = false;
        if (!ji) continue;
      }
      BlockAmalgKind kind = sp.negative ? BlockAmalgKind::Brouwerian : BlockAmalgKind::Lattice;
      auto consider_pair = [&](const std::vector<int>& fb, const std::vector<int>& fc) {
        std::uint64_t image = 0;
        for (int t : fb) image |= 1ull << t;
        for (int t : fc) image |= 1ull << t;
        if (!spot_generated(shape.poset, shape.top, sp.negative, image)) return false;
        out.push_back({&shape, fb, fc});
        return false;  // collect all
      };
      if (sp.bblk && sp.cblk) {
        std::vector<int> gb(bsz, -1);
        enumerate_block_embeddings(kind, sp.bblk->order, sp.bblk->top, shape.poset, shape.top, gb,
                                   0, [&](const std::vector<int>& fb) {
          std::vector<int> gc(csz, -1);
          for (auto [pb, pc] : sp.pins) gc[pc] = fb[pb];
          enumerate_block_embeddings(kind, sp.cblk->order, sp.cblk->top, shape.poset, shape.top,
                                     gc, 0, [&](const std::vector<int>& fc) {
            return consider_pair(fb, fc);
          });
          return false;
        });
      } else if (sp.bblk || sp.cblk) {
        const DecompBlock* blk = sp.bblk ? sp.bblk : sp.cblk;
        std::vector<int> g(blk->labels.size(), -1);
        enumerate_block_embeddings(kind, blk->order, blk->top, shape.poset, shape.top, g, 0,
                                   [&](const std::vector<int>& f) {
          return sp.bblk ? consider_pair(f, {}) : consider_pair({}, f);
        });
      } else if (m == 1) {
        out.push_back({&shape, {}, {}});
      }
    }
  }
  return out;
}

bool try_candidate_conic(const VFormation& v, const LegSystem& leg_c,
                         const std::vector<LegSystem>& legs_b, const FinResLat& s, int bound,
                         bool fsi, bool one_sided, AmalgamCert& out) {
  bool found = false;
  {
    {
      std::vector<int> no_pins_c(leg_c.sys.skeleton.size(), -1);
      chain_embeddings(leg_c.sys.skeleton, s, no_pins_c, [&](const std::vector<int>& sigc) {
        for (const auto& leg_b : legs_b) {
          // skeleton pins forced by the commuting square
          std::vector<int> pins(leg_b.sys.skeleton.size(), -1);
          bool consistent = true;
          for (int a = 0; a < v.A.size() && consistent; ++a) {
            int yb = leg_b.qmap[v.fB[a]];
            int sb = leg_b.spot_of[yb];
            int want = sigc[leg_c.spot_of[v.fC[a]]];
            if (pins[sb] >= 0 && pins[sb] != want) consistent = false;
            pins[sb] = want;
          }
          if (!consistent) continue;
          bool stop = chain_embeddings(leg_b.sys.skeleton, s, pins, [&](const std::vector<int>& sigb) {
            // generated skeleton only
            std::uint64_t skel_union = 0;
            for (int t : sigb) skel_union |= 1ull << t;
            for (int t : sigc) skel_union |= 1ull << t;
            if (generate_subalgebra(s, skel_union) != (s.size() == 64 ? ~0ull : (1ull << s.size()) - 1))
              return false;
            // proper prelattice blocks force their ambient lower cover into
            // the embedded skeleton
            auto cover_ok = [&](const LegSystem& leg, const std::vector<int>& sig) {
              for (int sp = 0; sp < leg.sys.skeleton.size(); ++sp) {
                if (leg.sys.blocks[sp].order.is_lattice()) continue;
                int target = sig[sp];
                int cover = -1;
                for (int j = 0; j < s.size(); ++j)
                  if (s.lt(j, target) && (cover < 0 || s.lt(cover, j))) cover = j;
                if (cover < 0) return false;
                if (std::find(sig.begin(), sig.end(), cover) == sig.end()) return false;
              }
              return true;
            };
            if (!cover_ok(leg_b, sigb) || !cover_ok(leg_c, sigc)) return false;

            // assemble spot problems
            std::vector<SpotProblem> spots(s.size());
            for (int sp = 0; sp < s.size(); ++sp) {
              spots[sp].negative = s.leq(sp, s.unit());
              spots[sp].central = s.central(sp);
              spots[sp].fsi_unit = fsi && sp == s.unit();
            }
            for (int sb = 0; sb < leg_b.sys.skeleton.size(); ++sb)
              spots[sigb[sb]].bblk = &leg_b.sys.blocks[sb];
            for (int sc = 0; sc < leg_c.sys.skeleton.size(); ++sc)
              spots[sigc[sc]].cblk = &leg_c.sys.blocks[sc];
            for (int a = 0; a < v.A.size(); ++a) {
              int yb = leg_b.qmap[v.fB[a]];
              int spot = sigc[leg_c.spot_of[v.fC[a]]];
              spots[spot].pins.push_back({leg_b.pos_in_block[yb], leg_c.pos_in_block[v.fC[a]]});
            }
            // budgeted DFS over per-spot candidates, candidate lists computed
            // once per spot for the largest budget the spot could ever get
            std::vector<int> min_size(s.size());
            int base = 0;
            for (int sp = 0; sp < s.size(); ++sp) {
              min_size[sp] =
                  std::max({1, spots[sp].bblk ? static_cast<int>(spots[sp].bblk->labels.size()) : 0,
                            spots[sp].cblk ? static_cast<int>(spots[sp].cblk->labels.size()) : 0});
              base += min_size[sp];
            }
            if (base > bound) return false;
            std::vector<std::vector<SpotCandidate>> cands(s.size());
            for (int sp = 0; sp < s.size(); ++sp) {
              cands[sp] = spot_candidates(spots[sp], bound - base + min_size[sp]);
              if (cands[sp].empty()) return false;
            }
            std::vector<int> chosen(s.size(), -1);
            auto dfs = [&](auto&& self, int sp, int used) -> bool {
              if (sp == s.size()) {
                // assemble and certify
                DecompSystem sys_d;
                sys_d.skeleton = s;
                sys_d.blocks.resize(s.size());
                for (int i = 0; i < s.size(); ++i) {
                  const SpotCandidate& c = cands[i][chosen[i]];
                  DecompBlock b;
                  b.order = c.shape->poset;
                  b.top = c.shape->top;
                  b.labels.resize(c.shape->poset.n);
                  for (int e = 0; e < c.shape->poset.n; ++e)
                    b.labels[e] = e == c.shape->top ? s.label(i)
                                                    : s.label(i) + "." + std::to_string(e + 1);
                  sys_d.blocks[i] = std::move(b);
                }
                FinResLat d;
                try {
                  d = build_algebra(sys_d);
                } catch (const Error&) {
                  return false;
                }
                if (fsi) {
                  bool ji = true;
                  for (int x = 0; x < d.size() && ji; ++x)
                    for (int y = 0; y < d.size() && ji; ++y)
                      if (d.join(x, y) == d.unit() && x != d.unit() && y != d.unit()) ji = false;
                  if (!ji) return false;
                }
                AmalgamCert cert;
                auto global_of = [&](int spot, int pos) {
                  return d.index_of(pos == cands[spot][chosen[spot]].shape->top
                                        ? s.label(spot)
                                        : s.label(spot) + "." + std::to_string(pos + 1));
                };
                cert.gB.resize(v.B.size());
                for (int x = 0; x < v.B.size(); ++x) {
                  int y = leg_b.qmap[x];
                  int spot = sigb[leg_b.spot_of[y]];
                  cert.gB[x] = global_of(spot, cands[spot][chosen[spot]].fb[leg_b.pos_in_block[y]]);
                }
                cert.gC.resize(v.C.size());
                for (int x = 0; x < v.C.size(); ++x) {
                  int spot = sigc[leg_c.spot_of[x]];
                  cert.gC[x] = global_of(spot, cands[spot][chosen[spot]].fc[leg_c.pos_in_block[x]]);
                }
                cert.D = std::move(d);
                Report rep = verify_amalgam(v, cert, one_sided);
                if (!rep.ok()) return false;
                cert.strong = amalgam_is_strong(v, cert);
                out = std::move(cert);
                found = true;
                return true;
              }
              int rest_min = 0;
              for (int j = sp + 1; j < s.size(); ++j) rest_min += min_size[j];
              int budget = bound - used - rest_min;
              if (budget < 1) return false;
              for (std::size_t ci = 0; ci < cands[sp].size(); ++ci) {
                if (cands[sp][ci].shape->poset.n > budget) continue;
                chosen[sp] = static_cast<int>(ci);
                if (self(self, sp + 1, used + cands[sp][ci].shape->poset.n)) return true;
              }
              chosen[sp] = -1;
              return false;
            };
            return dfs(dfs, 0, 0);
          });
          if (stop) return true;
        }
        return false;
      });
    }
  }
  return found;
}

std::optional<AmalgamCert> search_conic(const VFormation& v, int bound, bool fsi, bool one_sided) {
  if (!v.C.flags().conic || !v.C.flags().idempotent) return std::nullopt;
  auto quotients = leg_quotients(v, one_sided);
  std::erase_if(quotients, [](const LegQuotient& q) {
    return !q.alg.flags().conic || !q.alg.flags().idempotent;
  });
  if (quotients.empty()) return std::nullopt;

  LegSystem leg_c = make_leg({}, v.C);
  std::vector<LegSystem> legs_b;
  for (const auto& q : quotients) legs_b.push_back(make_leg(q.qmap, q.alg));

  // warm the shape catalogs before the parallel scan
  for (int m = 1; m <= 8; ++m) {
    prelattice_catalog(m);
    distributive_catalog(m);
  }
  for (int k = leg_c.sys.skeleton.size(); k <= bound; ++k) {
    std::vector<FinResLat> candidates;
    enumerate_quasi_involutive_chains(k, [&](const FinResLat& s) { candidates.push_back(s); });
    std::vector<AmalgamCert> slots(candidates.size());
    int hit = parallel_first_hit(static_cast<int>(candidates.size()), [&](int i) {
      return try_candidate_conic(v, leg_c, legs_b, candidates[i], bound, fsi, one_sided, slots[i]);
    });
    if (hit >= 0) return slots[hit];
  }
  return std::nullopt;
}

}  // namespace

std::optional<AmalgamCert> search_amalgam(const VFormation& v, AmalgClass cls, int size_bound,
                                          bool one_sided) {
  std::string w;
  if (!v.is_reduced(&w)) fail(Errc::NotReduced, w);
  switch (cls) {
    case AmalgClass::Chains: return search_chains(v, size_bound, false, one_sided);
    case AmalgClass::StarInvChains: return search_chains(v, size_bound, true, one_sided);
    case AmalgClass::Conic: return search_conic(v, size_bound, false, one_sided);
    case AmalgClass::ConicFsi: return search_conic(v, size_bound, true, one_sided);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Mechanical replay of the failure arguments

namespace {

void step(Report& rep, const std::string& text, bool computed, const std::string& detail = "") {
  rep.add(text, computed, detail);
}

bool interval_is_span(const FinResLat& a, int lo, int hi, int middles) {
  // [lo, hi] must be lo < m_1,...,m_k < hi with the m_i pairwise incomparable
  std::vector<int> mid;
  for (int x = 0; x < a.size(); ++x)
    if (a.lt(lo, x) && a.lt(x, hi)) mid.push_back(x);
  if (static_cast<int>(mid.size()) != middles) return false;
  for (int x : mid)
    for (int y : mid)
      if (x != y && a.leq(x, y)) return false;
  for (int x : mid)
    if (a.meet(x, x) != x) return false;
  for (int x : mid)
    for (int y : mid)
      if (x != y && (a.meet(x, y) != lo || a.join(x, y) != hi)) return false;
  return true;
}

Report replay_APfails() {
  Report rep;
  FinResLat b = library("fig_APfails_B");
  FinResLat c = library("fig_APfails_C");
  int b3 = b.index_of("b3"), a3 = b.index_of("a3"), b2 = b.index_of("b2");
  step(rep, "in B: b3^l = 1 and b3^r = a3, so {1, a3} is a covering pair of inverses",
       b.linv(b3) == b.unit() && b.rinv(b3) == a3);
  step(rep, "in B: a3 covers 1", [&] {
    for (int x = 0; x < b.size(); ++x)
      if (b.lt(b.unit(), x) && b.lt(x, a3)) return false;
    return b.lt(b.unit(), a3);
  }());
  int b3p = c.index_of("b3'"), a3p = c.index_of("a3'"), b2p = c.index_of("b2'"),
      a2p = c.index_of("a2'");
  step(rep, "in C: b3'^l = 1 and b3'^r = a3', so a3' must also cover 1 in any chain amalgam",
       c.linv(b3p) == c.unit() && c.rinv(b3p) == a3p);
  step(rep, "forced identification a3 = a3' (unique cover of 1 in a chain)", true,
       "bookkeeping step");
  step(rep, "in B: a3^r = b2; in C: a3'^r = b2'; hence b2 = b2' in the amalgam",
       b.rinv(a3) == b2 && c.rinv(a3p) == b2p);
  step(rep, "in B: b2^r = a3; in C: b2'^r = a2'; hence a2' = a3 = a3'",
       b.rinv(b2) == a3 && c.rinv(b2p) == a2p);
  step(rep, "contradiction: a2' and a3' are distinct in C", a2p != a3p);
  return rep;
}

Report replay_APfailsVar() {
  Report rep;
  FinResLat b = library("fig_APfailsVar_B");
  FinResLat c = library("fig_APfailsVar_C");
  int aB = b.index_of("aB"), bB = b.index_of("bB"), a = b.index_of("a");
  int aC = c.index_of("aC"), bC = c.index_of("bC"), ac_a = c.index_of("a");
  step(rep, "B is subdirectly irreducible and its monolith class of 1 is exactly A = {b, 1, a}",
       [&] {
         if (!is_si(b)) return false;
         // the monolith: meet of all nontrivial congruences, here computed
         // as the pairs related by every nontrivial congruence
         auto all = enumerate_congruences(b);
         std::set<std::string> cls1;
         for (int x = 0; x < b.size(); ++x) {
           bool everywhere = true;
           for (const auto& th : all)
             if (!th.trivial() && th.cls[x] != th.cls[b.unit()]) everywhere = false;
           if (everywhere) cls1.insert(b.label(x));
         }
         return cls1 == std::set<std::string>{"b", "1", "a"};
       }(),
       "so every 1-amalgam is an amalgam and gB is injective");
  step(rep, "in B: the inverses of bB are {a, aB}, a covering pair, so aB covers a",
       (b.linv(bB) == aB && b.rinv(bB) == a) &&
           [&] {
             for (int x = 0; x < b.size(); ++x)
               if (b.lt(a, x) && b.lt(x, aB)) return false;
             return b.lt(a, aB);
           }());
  step(rep, "in C: the inverses of bC are {a, aC}, a covering pair, so aC covers a",
       (c.linv(bC) == ac_a && c.rinv(bC) == aC));
  step(rep, "forced identification aB = aC =: e (unique cover of a in a chain)", true,
       "bookkeeping step");
  int bBp = b.index_of("bB'"), bCp = c.index_of("bC'");
  step(rep, "in B: aB^l = bB' and aB^r = bB; in C: aC^l = bC and aC^r = bC'",
       b.linv(aB) == bBp && b.rinv(aB) == bB && c.linv(aC) == bC && c.rinv(aC) == bCp,
       "so e^l forces bC = bB' and e^r forces bB = bC'");
  step(rep, "in C: aC*bC = aC (left-zero tie); in B: aB*bB' = bB' (lower layer absorbs)",
       c.mult(aC, bC) == aC && b.mult(aB, bBp) == bBp,
       "with bC = bB' these compute e*bC twice: once to e, once to bB'");
  step(rep, "contradiction: e = aB is strictly positive but bB' is strictly negative",
       b.lt(b.unit(), aB) && b.lt(bBp, b.unit()));
  return rep;
}

Report replay_APfails2() {
  Report rep;
  FinResLat b = library("fig_APfails2_B");
  FinResLat c = library("fig_APfails2_C");
  int bb = b.index_of("b"), b1 = b.index_of("b1"), b2 = b.index_of("b2"), ba = b.index_of("a");
  int b1p = b.index_of("b1'"), b2p = b.index_of("b2'");
  int cc = c.index_of("c"), c1 = c.index_of("c1"), c2 = c.index_of("c2"), dd = c.index_of("d");
  int d1 = c.index_of("d1"), d2 = c.index_of("d2"), ca = c.index_of("a");
  auto in_skel = [](const FinResLat& x, int e) {
    for (int y = 0; y < x.size(); ++y)
      if (x.linv(y) == e || x.rinv(y) == e) return true;
    return false;
  };
  step(rep, "b is an inverse element of B; c and d are inverse elements of C",
       in_skel(b, bb) && in_skel(c, cc) && in_skel(c, dd),
       "inverses are conical, so b is comparable with c and with d in any conic amalgam");
  step(rep, "in B: b1 /\\ b2 = b and b1 \\/ b2 = a",
       b.meet(b1, b2) == bb && b.join(b1, b2) == ba);
  step(rep, "in C: c1 /\\ c2 = c, c1 \\/ c2 = a, and c < a",
       c.meet(c1, c2) == cc && c.join(c1, c2) == ca && c.lt(cc, ca));
  step(rep, "if b < c: conicality of c forces b1, b2 <= c, hence a = b1 \\/ b2 <= c, contradicting c < a",
       true, "bookkeeping step");
  step(rep, "if c < b: conicality of b forces c1, c2 <= b, hence a = c1 \\/ c2 <= b < a", true,
       "bookkeeping step; uses b < a in B: " + std::string(b.lt(bb, ba) ? "verified" : "FAILS"));
  step(rep, "hence b = c in the amalgam", b.lt(bb, ba));
  step(rep, "in B: b1' /\\ b2' = 1 and b1' \\/ b2' = b",
       b.meet(b1p, b2p) == b.unit() && b.join(b1p, b2p) == bb);
  step(rep, "in C: d1 /\\ d2 = 1 and d1 \\/ d2 = d",
       c.meet(d1, d2) == c.unit() && c.join(d1, d2) == dd);
  step(rep, "the dual argument forces b = d, hence c = d", true, "bookkeeping step");
  step(rep, "contradiction: c and d are distinct in C", cc != dd && c.lt(dd, cc));
  return rep;
}

Report replay_APfails3() {
  Report rep;
  FinResLat b = library("fig_APfails3_B");
  FinResLat c = library("fig_APfails3_C");
  int bb = b.index_of("b"), ba = b.index_of("a");
  int cc = c.index_of("c"), dd = c.index_of("d");
  auto in_skel = [](const FinResLat& x, int e) {
    for (int y = 0; y < x.size(); ++y)
      if (x.linv(y) == e || x.rinv(y) == e) return true;
    return false;
  };
  step(rep, "the interval [b, a] of B is the diamond M3",
       interval_is_span(b, bb, ba, 3));
  step(rep, "the interval [1, b] of B is the diamond M3",
       interval_is_span(b, b.unit(), bb, 3));
  step(rep, "gB(b) is an inverse element; c and d are inverse elements of C",
       in_skel(b, bb) && in_skel(c, cc) && in_skel(c, dd),
       "gB preserves inverses, so gB(b) is conical in any conic 1-amalgam");
  step(rep, "gB fixes a and 1 (both lie in A)",
       b.label(ba) == "a" && c.index_of("a") >= 0);
  step(rep,
       "if gB(b) < c: M3 is simple, so gB embeds [b, a] or collapses it; both contradict "
       "conicality of c between gB(b) and a",
       true, "bookkeeping step");
  step(rep, "hence c <= gB(b); dually [1, b] forces gB(b) <= d; so c <= d", true,
       "bookkeeping step");
  step(rep, "contradiction: d < c in C", c.lt(dd, cc));
  return rep;
}

}  // namespace

Report check_failure_argument(const std::string& figure_id) {
  if (figure_id == "APfails") return replay_APfails();
  if (figure_id == "APfailsVar") return replay_APfailsVar();
  if (figure_id == "APfails2") return replay_APfails2();
  if (figure_id == "APfails3") return replay_APfails3();
  fail(Errc::UnknownFigure, figure_id);
}

}  // namespace ircl
