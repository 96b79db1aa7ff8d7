// oracles.hpp --- independent brute-force reference implementations used to
// freeze expected values. These deliberately avoid the layer-sequence and
// decomposition machinery they are checking.
#ifndef IRCL_TESTS_ORACLES_HPP
#define IRCL_TESTS_ORACLES_HPP

#include <vector>

#include "ircl/finreslat.hpp"

namespace ircl::oracle {

// Every idempotent residuated chain with n elements, one per isomorphism
// class, found by backtracking over raw multiplication tables on the fixed
// n-chain (no layer sequences involved).
std::vector<FinResLat> chains_by_tables(int n);

// Every idempotent residuated lattice with n elements up to isomorphism,
// by enumerating all lattice orders and backtracking over tables.
// conic_only restricts to algebras whose unit is comparable to everything.
std::vector<FinResLat> lattices_by_tables(int n, bool conic_only);

// All congruences found as operation-compatible partitions, independent of
// the filter machinery.
std::vector<std::vector<int>> congruences_by_partitions(const FinResLat& a);

// Closure of a subset under all residuated lattice operations.
std::uint64_t closure_all_ops(const FinResLat& a, std::uint64_t seeds);

}  // namespace ircl::oracle

#endif
