#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ircl/chains.hpp"
#include "ircl/enumerate.hpp"
#include <set>

#include "oracles.hpp"

using namespace ircl;

namespace {
std::uint8_t idx(const FinResLat& a, const std::string& l) {
  int i = a.index_of(l);
  REQUIRE(i >= 0);
  return static_cast<std::uint8_t>(i);
}
}  // namespace

TEST_CASE("trivial algebra") {
  FinResLat t = FinResLat::trivial();
  CHECK(t.size() == 1);
  CHECK(verify_algebra(t).ok());
  CHECK(t.linv(0) == 0);
  CHECK(t.rinv(0) == 0);
  CHECK(t.star_lo(0) == 0);
  CHECK(t.partner(0) == 0);
  CHECK(t.gamma(0) == 0);
}

TEST_CASE("sugihara(3) is the conservative three-chain") {
  FinResLat s = library("sugihara:3");
  CHECK(s.flags().idempotent);
  CHECK(s.flags().commutative);
  CHECK(s.flags().chain);
  int b = idx(s, "b1"), a = idx(s, "a1"), one = s.unit();
  CHECK(s.mult(a, b) == b);  // tie goes to the meet
  CHECK(s.mult(b, a) == b);
  CHECK(s.mult(a, one) == a);
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y) {
      int p = s.mult(x, y);
      CHECK((p == x || p == y));  // conservative
    }
}

TEST_CASE("corrupting the sugihara(3) table is rejected with a witness") {
  FinResLat s = library("sugihara:3");
  int n = s.size();
  std::vector<std::uint8_t> mult(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mult[x * n + y] = static_cast<std::uint8_t>(s.mult(x, y));
  mult[idx(s, "b1") * n + idx(s, "a1")] = idx(s, "a1");
  bool threw = false;
  try {
    FinResLat::build_on_poset(s.labels(), s.order(), mult, s.unit());
  } catch (const Error& e) {
    threw = true;
    CHECK((e.code() == Errc::NotResiduated || e.code() == Errc::NotAssociative ||
           e.code() == Errc::NotMonotone));
  }
  CHECK(threw);
}

TEST_CASE("inverse operations") {
  for (const char* name : {"sugihara:5", "fig_APfails_B", "fig_APfailsVar_C"}) {
    FinResLat a = library(name);
    CHECK(a.linv(a.unit()) == a.unit());
    CHECK(a.rinv(a.unit()) == a.unit());
  }
  FinResLat b = library("fig_APfails_B");
  CHECK(b.linv(idx(b, "b3")) == b.unit());
  FinResLat s5 = library("sugihara:5");
  CHECK(s5.rinv(idx(s5, "b1")) == idx(s5, "a1"));
}

TEST_CASE("stars and partners") {
  FinResLat p = library("noncomm_sugihara:2:1");  // tie 1 left, tie 2 right
  int a1 = idx(p, "a1"), b1 = idx(p, "b1");
  CHECK_FALSE(p.central(a1));
  CHECK(p.partner(a1) == b1);
  CHECK(p.mult(a1, b1) == a1);  // left-zero tie
  CHECK(p.mult(b1, a1) == b1);
  int a2 = idx(p, "a2"), b2 = idx(p, "b2");
  CHECK(p.mult(a2, b2) == b2);  // right-zero tie
  CHECK(p.mult(b2, a2) == a2);

  FinResLat s5 = library("sugihara:5");
  int sa1 = idx(s5, "a1");
  bool commutes_with_all = true;
  for (int x = 0; x < s5.size(); ++x)
    if (s5.mult(sa1, x) != s5.mult(x, sa1)) commutes_with_all = false;
  CHECK(commutes_with_all);
  CHECK(s5.central(sa1));
  CHECK(s5.partner(sa1) == sa1);

  // {linv, rinv} = {star_lo, partner} for non-central elements; central ones
  // have both inverses equal to their star, and are their own partner
  for (const char* name : {"sugihara:5", "noncomm_sugihara:2:1", "fig_samemon_left"}) {
    FinResLat a = library(name);
    for (int x = 0; x < a.size(); ++x) {
      if (a.central(x)) {
        CHECK(a.linv(x) == a.star_lo(x));
        CHECK(a.rinv(x) == a.star_lo(x));
        CHECK(a.partner(x) == x);
      } else {
        std::set<int> invs{a.linv(x), a.rinv(x)};
        std::set<int> stars{a.star_lo(x), a.partner(x)};
        CHECK(invs == stars);
      }
    }
  }
}

TEST_CASE("gamma and the skeleton") {
  FinResLat b = library("fig_APfails2_B");
  CHECK(b.gamma(b.unit()) == b.unit());
  CHECK(b.gamma(idx(b, "b1'")) == idx(b, "b"));
  CHECK(b.gamma(idx(b, "b1")) == idx(b, "a"));
  SubAlgebra skel = skeleton(b);
  std::set<std::string> got;
  for (int i = 0; i < skel.algebra.size(); ++i) got.insert(skel.algebra.label(i));
  CHECK(got == std::set<std::string>{"a*", "b*", "1", "b", "a"});
  for (int s = 0; s < skel.algebra.size(); ++s)
    CHECK(b.gamma(skel.parent_index[s]) == skel.parent_index[s]);

  FinResLat s5 = library("sugihara:5");
  SubAlgebra s5skel = skeleton(s5);
  CHECK(s5skel.algebra.size() == 5);  // a chain of inverses is its own skeleton

  SubAlgebra tskel = skeleton(FinResLat::trivial());
  CHECK(tskel.algebra.size() == 1);

  CHECK(verify_nucleus(b).ok());
  CHECK(verify_nucleus(s5).ok());
}

TEST_CASE("blocks and block kinds") {
  FinResLat s7 = library("sugihara:7");
  for (const auto& blk : blocks(s7)) {
    CHECK(blk.elems.size() == 1);
    CHECK(blk.kind == BlockKind::Trivial);
  }
  FinResLat b = library("fig_APfails2_B");
  auto bs = blocks(b);
  bool found_a = false, found_b = false;
  for (const auto& blk : bs) {
    std::set<std::string> elems;
    for (int e : blk.elems) elems.insert(b.label(e));
    if (b.label(blk.skel_element) == "a") {
      found_a = true;
      CHECK(elems == std::set<std::string>{"b1", "b2", "a"});
      CHECK(blk.kind == BlockKind::ProperPrelattice);
    }
    if (b.label(blk.skel_element) == "b") {
      found_b = true;
      CHECK(elems == std::set<std::string>{"b1'", "b2'", "b"});
      CHECK(blk.kind == BlockKind::ProperPrelattice);
    }
  }
  CHECK(found_a);
  CHECK(found_b);
  FinResLat c = library("fig_APfails2_C");
  std::set<std::string> block_d;
  for (const auto& blk : blocks(c))
    if (c.label(blk.skel_element) == "d") {
      for (int e : blk.elems) block_d.insert(c.label(e));
      CHECK(blk.kind == BlockKind::ProperPrelattice);
    }
  CHECK(block_d == std::set<std::string>{"d1", "d2", "d"});
}

TEST_CASE("property predicates on the figures") {
  for (int k = 1; k <= 5; ++k) CHECK(library("sugihara:" + std::to_string(2 * k + 1)).flags().star_involutive);
  FinResLat fb = library("fig_APfails_B");
  CHECK_FALSE(fb.flags().star_involutive);
  CHECK_FALSE(fb.flags().rigid);
  FinResLat f2b = library("fig_APfails2_B");
  CHECK(f2b.flags().rigid);
  CHECK_FALSE(f2b.flags().conjunctive);
  FinResLat f3b = library("fig_APfails3_B");
  CHECK(f3b.flags().rigid);
  CHECK_FALSE(f3b.flags().conjunctive);
  CHECK(f3b.flags().commutative);
}

TEST_CASE("conjugates") {
  for (const char* name : {"sugihara:5", "fig_APfailsVar_B", "fig_APfails2_C"}) {
    FinResLat a = library(name);
    for (int x = 0; x < a.size(); ++x) {
      auto [lam, rho] = a.conjugates(a.unit(), x);
      CHECK(lam == a.meet(x, a.unit()));
      CHECK(rho == a.meet(x, a.unit()));
    }
    if (a.flags().commutative)
      for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y) {
          auto [lam, rho] = a.conjugates(x, y);
          CHECK(lam == rho);
        }
  }
  // direct evaluation against the defining maxima
  FinResLat b = library("fig_APfailsVar_B");
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      auto [lam, rho] = b.conjugates(x, y);
      int best_l = -1;
      for (int z = 0; z < b.size(); ++z)
        if (b.leq(b.mult(x, z), b.mult(y, x)) && (best_l < 0 || b.leq(best_l, z))) best_l = z;
      CHECK(lam == b.meet(b.ld(x, b.mult(y, x)), b.unit()));
      CHECK(rho == b.meet(b.rd(b.mult(x, y), x), b.unit()));
    }
}

TEST_CASE("structural invariants over enumerated chains") {
  for (int n = 1; n <= 5; ++n)
    for (const FinResLat& a : enumerate_chains(n)) {
      CHECK(verify_algebra(a).ok());
      CHECK(verify_nucleus(a).ok());
      for (int x = 0; x < a.size(); ++x) {
        int l = a.linv(x), r = a.rinv(x);
        CHECK((a.leq(l, r) || a.leq(r, l)));  // inverses comparable
        if (x != a.unit()) {
          // both inverses carry the sign opposite to x
          bool x_neg = a.lt(x, a.unit());
          CHECK(a.leq(a.unit(), l) == x_neg);
          CHECK(a.leq(a.unit(), r) == x_neg);
        }
        // covering pair: nothing strictly between
        for (int y = 0; y < a.size(); ++y)
          CHECK_FALSE((a.lt(a.meet(l, r), y) && a.lt(y, a.join(l, r))));
        // splitting pair
        for (int c = 0; c < a.size(); ++c)
          CHECK((a.leq(c, a.star_lo(x)) || a.leq(a.star_hi(x), c)));
      }
      // Galois connection of star_lo
      for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
          CHECK(a.leq(x, a.star_lo(y)) == a.leq(y, a.star_lo(x)));
    }
}

TEST_CASE("conjunctivity equals all blocks closed under meet") {
  int checked = 0;
  enumerate_conic(5, [&](const FinResLat& a) {
    bool closed = true;
    for (int x = 0; x < a.size() && closed; ++x)
      for (int y = 0; y < a.size() && closed; ++y)
        if (a.gamma(x) == a.gamma(y) && a.gamma(a.meet(x, y)) != a.gamma(x)) closed = false;
    CHECK(is_conjunctive(a) == closed);
    ++checked;
  });
  CHECK(checked == 19);
}

TEST_CASE("products and isomorphism") {
  FinResLat s3 = library("sugihara:3");
  FinResLat p = direct_product(s3, s3);
  CHECK(p.size() == 9);
  CHECK(verify_algebra(p).ok());
  CHECK_FALSE(p.flags().conic);
  CHECK(isomorphic(s3, library("sugihara:3")));
  CHECK(isomorphic(s3, library("fig_APfailsVar_A")));  // same shape, relabeled
  CHECK_FALSE(isomorphic(s3, enumerate_chains(3)[0]));  // the Brouwerian 3-chain differs
}

TEST_CASE("subalgebra machinery") {
  FinResLat s5 = library("sugihara:5");
  auto subs = all_subuniverses(s5);
  CHECK(subs.size() == 4);  // 1, two crowns, everything
  for (auto mask : subs) {
    SubAlgebra sub = induced_subalgebra(s5, mask);
    CHECK(is_subalgebra_of(sub.algebra, s5));
  }
  CHECK(is_subalgebra_of(library("fig_APfails2_A"), library("fig_APfails2_B")));
  CHECK(is_subalgebra_of(library("fig_APfails2_A"), library("fig_APfails2_C")));
  CHECK_FALSE(is_subalgebra_of(library("sugihara:3"), library("fig_APfails2_B")));
}
