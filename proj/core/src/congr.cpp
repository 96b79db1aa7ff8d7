#include "ircl/congr.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace ircl {

bool is_congruence_filter(const FinResLat& a, CongFilter f, std::string* witness) {
  auto in = [&](int x) { return (f >> x) & 1u; };
  auto miss = [&](std::string msg) {
    if (witness) *witness = std::move(msg);
    return false;
  };
  if (!in(a.unit())) return miss("unit missing");
  for (int x = 0; x < a.size(); ++x) {
    if (!in(x)) continue;
    for (int y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) && !in(y)) return miss("not upward closed at " + a.tuple({x, y}));
      if (in(y) && !in(a.mult(x, y))) return miss("not product closed at " + a.tuple({x, y}));
      auto [lam, rho] = a.conjugates(y, x);
      if (!in(lam) || !in(rho)) return miss("not conjugation closed at " + a.tuple({y, x}));
    }
  }
  return true;
}

int s_term(const FinResLat& a, int y, int n) {
  if (n < 1) fail(Errc::BadInput, "s_n needs n >= 1");
  // values y^{c1 c1 ... ck ck} after k doubled inversion steps
  std::set<int> level{y};
  int acc = y;
  for (int k = 0; k < n; ++k) {
    std::set<int> next;
    for (int v : level) {
      next.insert(a.linv(a.linv(v)));
      next.insert(a.rinv(a.rinv(v)));
    }
    level = std::move(next);
  }
  for (int v : level) acc = a.meet(acc, v);
  return acc;
}

int t_term(const FinResLat& a, int y, int n) { return a.meet(a.unit(), s_term(a, y, n)); }

int s_iter(const FinResLat& a, int y, int n) {
  int v = y;
  for (int k = 0; k < n; ++k) v = s_term(a, v, 1);
  return v;
}

int s_stabilization(const FinResLat& a, int y) {
  int v = y;
  for (int n = 0; n <= a.size(); ++n) {
    int next = s_term(a, v, 1);
    if (next == v) return n;
    v = next;
  }
  fail(Errc::Internal, "s-iteration failed to stabilize within the algebra size");
}

CongFilter generate_filter_oracle(const FinResLat& a, std::uint64_t seeds) {
  CongFilter f = seeds | (1ull << a.unit());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < a.size(); ++x) {
      if (!((f >> x) & 1u)) continue;
      for (int y = 0; y < a.size(); ++y) {
        int add[4] = {a.leq(x, y) ? y : x, ((f >> y) & 1u) ? a.mult(x, y) : x,
                      a.conjugates(y, x).first, a.conjugates(y, x).second};
        for (int v : add)
          if (!((f >> v) & 1u)) {
            f |= 1ull << v;
            changed = true;
          }
      }
    }
  }
  std::string w;
  if (!is_congruence_filter(a, f, &w)) fail(Errc::Internal, "oracle closure not a filter: " + w);
  return f;
}

void require_semiconic_idempotent(const FinResLat& a) {
  std::string w;
  if (!is_idempotent(a, &w)) fail(Errc::NotSemiconicIdempotent, "not idempotent, witness " + w);
  if (!is_semiconic_finite(a)) fail(Errc::NotSemiconicIdempotent, "algebra has a non-conic SI quotient");
}

CongFilter generate_filter_formula(const FinResLat& a, std::uint64_t seeds) {
  require_semiconic_idempotent(a);
  // <Y> is the upset of the meet of stabilized t-values of Y /\ 1; the
  // finite s-chain makes the exponent bound exact.
  int bottom = a.unit();
  for (std::uint64_t s = seeds; s;) {
    int y = std::countr_zero(s);
    s &= s - 1;
    int ym = a.meet(y, a.unit());
    int v = t_term(a, ym, std::max(1, s_stabilization(a, ym)));
    bottom = a.meet(bottom, v);
  }
  CongFilter f = 0;
  for (int x = 0; x < a.size(); ++x)
    if (a.leq(bottom, x)) f |= 1ull << x;
  return f;
}

Congruence congruence_from_filter(const FinResLat& a, CongFilter f) {
  std::string w;
  if (!is_congruence_filter(a, f, &w)) fail(Errc::BadInput, "not a congruence filter: " + w);
  auto related = [&](int x, int y) {
    return ((f >> a.ld(x, y)) & 1u) && ((f >> a.ld(y, x)) & 1u);
  };
  Congruence th;
  th.cls.assign(a.size(), -1);
  for (int x = 0; x < a.size(); ++x) {
    if (th.cls[x] >= 0) continue;
    th.cls[x] = th.classes;
    for (int y = x + 1; y < a.size(); ++y)
      if (th.cls[y] < 0 && related(x, y)) th.cls[y] = th.classes;
    ++th.classes;
  }
  return th;
}

CongFilter filter_from_congruence(const FinResLat& a, const Congruence& th) {
  // upset of the class of 1
  CongFilter f = 0;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (th.cls[y] == th.cls[a.unit()] && a.leq(y, x)) f |= 1ull << x;
  std::string w;
  if (!is_congruence_filter(a, f, &w))
    fail(Errc::BadInput, "congruence does not induce a filter: " + w);
  return f;
}

std::vector<CongFilter> enumerate_filters(const FinResLat& a) {
  std::set<CongFilter> seen;
  std::vector<CongFilter> work{generate_filter_oracle(a, 0)};
  seen.insert(work[0]);
  for (std::size_t k = 0; k < work.size(); ++k) {
    CongFilter base = work[k];
    for (int e = 0; e < a.size(); ++e) {
      if ((base >> e) & 1u) continue;
      CongFilter grown = generate_filter_oracle(a, base | (1ull << e));
      if (seen.insert(grown).second) work.push_back(grown);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Congruence> enumerate_congruences(const FinResLat& a) {
  std::vector<Congruence> out;
  for (CongFilter f : enumerate_filters(a)) out.push_back(congruence_from_filter(a, f));
  return out;
}

FinResLat quotient(const FinResLat& a, const Congruence& th) {
  int m = th.classes;
  std::vector<int> rep(m, -1);
  for (int x = 0; x < a.size(); ++x)
    if (rep[th.cls[x]] < 0) rep[th.cls[x]] = x;
  std::vector<std::string> labels(m);
  for (int c = 0; c < m; ++c) labels[c] = "[" + a.label(rep[c]) + "]";
  std::vector<std::uint8_t> leq(m * m, 0), mult(m * m, 0);
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d) {
      // [x] <= [y] iff x /\ y is congruent to x
      leq[c * m + d] = th.cls[a.meet(rep[c], rep[d])] == c;
      mult[c * m + d] = static_cast<std::uint8_t>(th.cls[a.mult(rep[c], rep[d])]);
    }
  return FinResLat::build_on_poset(std::move(labels), Poset::from_leq(m, leq), mult,
                                   th.cls[a.unit()]);
}

namespace {

Congruence meet_congruence(const Congruence& u, const Congruence& v) {
  int n = static_cast<int>(u.cls.size());
  Congruence w;
  w.cls.assign(n, -1);
  std::map<std::pair<int, int>, int> ids;
  for (int x = 0; x < n; ++x) {
    auto key = std::make_pair(u.cls[x], v.cls[x]);
    auto it = ids.find(key);
    if (it == ids.end()) it = ids.emplace(key, w.classes++).first;
    w.cls[x] = it->second;
  }
  return w;
}

}  // namespace

bool is_fsi(const FinResLat& a) {
  // lattice-theoretic route: the identity congruence is meet-irreducible
  auto cong = enumerate_congruences(a);
  bool lattice_route = true;
  for (std::size_t i = 0; i < cong.size() && lattice_route; ++i)
    for (std::size_t j = 0; j < cong.size() && lattice_route; ++j) {
      if (cong[i].trivial() || cong[j].trivial()) continue;
      if (meet_congruence(cong[i], cong[j]).trivial()) lattice_route = false;
    }
  // join-irreducibility of 1, valid on semiconic idempotent inputs
  if (a.flags().idempotent && is_semiconic_finite(a)) {
    bool join_irr = true;
    for (int x = 0; x < a.size() && join_irr; ++x)
      for (int y = 0; y < a.size() && join_irr; ++y)
        if (a.join(x, y) == a.unit() && x != a.unit() && y != a.unit()) join_irr = false;
    if (join_irr != lattice_route)
      fail(Errc::Internal, "join-irreducibility route disagrees with congruence route");
  }
  return lattice_route;
}

bool is_si(const FinResLat& a) {
  auto cong = enumerate_congruences(a);
  Congruence monolith;
  bool first = true;
  for (const auto& th : cong) {
    if (th.trivial()) continue;
    monolith = first ? th : meet_congruence(monolith, th);
    first = false;
  }
  return !first && !monolith.trivial();
}

Report check_cep(const FinResLat& b) {
  require_semiconic_idempotent(b);
  Report rep;
  auto cong_b = enumerate_congruences(b);
  int checked = 0;
  for (std::uint64_t sub : all_subuniverses(b)) {
    SubAlgebra s = induced_subalgebra(b, sub);
    for (const auto& th : enumerate_congruences(s.algebra)) {
      ++checked;
      bool extended = false;
      for (const auto& psi : cong_b) {
        bool agrees = true;
        for (int i = 0; i < s.algebra.size() && agrees; ++i)
          for (int j = 0; j < s.algebra.size() && agrees; ++j)
            if ((th.cls[i] == th.cls[j]) !=
                (psi.cls[s.parent_index[i]] == psi.cls[s.parent_index[j]]))
              agrees = false;
        if (agrees) {
          extended = true;
          break;
        }
      }
      if (!extended) {
        rep.add("congruence extension", false,
                "no extension for a congruence of a subalgebra of size " +
                    std::to_string(s.algebra.size()));
        return rep;
      }
    }
  }
  rep.add("congruence extension", true,
          std::to_string(checked) + " subalgebra congruences extended");
  return rep;
}

bool is_semiconic_finite(const FinResLat& a) {
  std::string w;
  if (!is_idempotent(a, &w)) fail(Errc::NotIdempotent, "witness " + w);
  for (const auto& th : enumerate_congruences(a)) {
    if (th.total()) continue;
    FinResLat q = quotient(a, th);
    if (is_si(q) && !q.flags().conic) return false;
  }
  return true;
}

bool check_semiconic_schema(const FinResLat& a, int depth) {
  auto conjugate_orbit = [&](int v) {
    std::set<int> cur{v};
    for (int d = 0; d < depth; ++d) {
      std::set<int> next = cur;
      for (int w : cur)
        for (int u = 0; u < a.size(); ++u) {
          auto [lam, rho] = a.conjugates(u, w);
          next.insert(lam);
          next.insert(rho);
        }
      if (next == cur) break;
      cur = std::move(next);
    }
    return cur;
  };
  for (int x = 0; x < a.size(); ++x) {
    auto g1 = conjugate_orbit(a.meet(x, a.unit()));
    auto g2 = conjugate_orbit(a.meet(a.ld(x, a.unit()), a.unit()));
    for (int u : g1)
      for (int v : g2)
        if (a.join(u, v) != a.unit()) return false;
  }
  return true;
}

Report check_join_one_implication(const FinResLat& a) {
  require_semiconic_idempotent(a);
  Report rep;
  bool ok = true;
  std::string w;
  for (int x = 0; x < a.size() && ok; ++x)
    for (int y = 0; y < a.size() && ok; ++y) {
      if (a.join(x, y) != a.unit()) continue;
      int nx = std::max(1, s_stabilization(a, x));
      int ny = std::max(1, s_stabilization(a, y));
      for (int n = 1; n <= nx && ok; ++n)
        for (int m = 1; m <= ny && ok; ++m)
          if (a.join(s_term(a, x, n), s_term(a, y, m)) != a.unit()) {
            ok = false;
            w = a.tuple({x, y}) + " with exponents " + std::to_string(n) + "," + std::to_string(m);
          }
    }
  rep.add("x v y = 1 implies s_n(x) v s_m(y) = 1", ok, w);
  return rep;
}

}  // namespace ircl
