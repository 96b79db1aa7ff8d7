// poset.hpp --- dense finite posets with bitmask up-sets, plus the small-poset
// catalogs used for block shapes in decompositions and amalgam searches.
#ifndef IRCL_POSET_HPP
#define IRCL_POSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ircl/report.hpp"

namespace ircl {

// Elements are 0..n-1, n <= 64. up[i] is the bitmask of {j : i <= j}.
struct Poset {
  int n = 0;
  std::vector<std::uint64_t> up;

  static Poset antichain(int n);
  static Poset from_leq(int n, const std::vector<std::uint8_t>& leq);  // row-major n*n
  // Reflexive-transitive closure of cover pairs (lo, hi); rejects cycles.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  bool leq(int i, int j) const { return (up[i] >> j) & 1u; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  std::uint64_t all_mask() const { return n == 64 ? ~0ull : ((1ull << n) - 1); }
  std::uint64_t down_mask(int j) const;

  std::optional<int> meet(int i, int j) const;  // greatest lower bound if it exists
  std::optional<int> join(int i, int j) const;
  std::optional<int> top() const;
  std::optional<int> bottom() const;
  std::vector<std::pair<int, int>> cover_pairs() const;

  bool is_chain() const;
  bool is_lattice() const;
  // Topped join-semilattice in which every lower-bounded pair has a meet.
  bool is_prelattice() const;
  bool is_distributive_lattice() const;
  // Largest z with z /\ i <= j; requires a lattice. nullopt when none exists.
  std::optional<int> rel_pseudocomplement(int i, int j) const;
  // Lattice in which every rel_pseudocomplement exists (finite: distributive).
  bool is_brouwerian() const;

  Poset restrict_to(const std::vector<int>& elems) const;  // induced subposet
  // Minimal-over-permutations byte encoding; equal codes iff isomorphic.
  std::vector<std::uint8_t> canonical_code() const;
  bool operator==(const Poset& o) const { return n == o.n && up == o.up; }
};

// Dedekind-MacNeille completion. The returned poset is a lattice; embed[i]
// gives the image of element i. Existing meets and joins are preserved.
Poset dedekind_macneille(const Poset& p, std::vector<int>& embed);

// All posets with n elements, one per isomorphism class, in canonical order.
const std::vector<Poset>& all_posets(int n);  // n <= 8 supported

struct BlockShape {
  Poset poset;
  int top = 0;
  bool lattice = false;
  bool distributive = false;
};

// All topped prelattices with n elements up to isomorphism (canonical order).
const std::vector<BlockShape>& prelattice_catalog(int n);
// The distributive-lattice subset of the catalog (finite Brouwerian blocks).
const std::vector<BlockShape>& distributive_catalog(int n);

}  // namespace ircl

#endif
