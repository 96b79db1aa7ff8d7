// chains.hpp --- idempotent residuated chains through their three equivalent
// presentations: full algebra, idempotent Galois connection reduct, enhanced
// monoidal preorder. Plus layers, subalgebra generation, crowns, nested sums.
#ifndef IRCL_CHAINS_HPP
#define IRCL_CHAINS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ircl/emp.hpp"
#include "ircl/finreslat.hpp"

namespace ircl {

// The {meet, join, l, r, 1} reduct of an idempotent residuated chain.
struct IdGaloisConn {
  int n = 0;
  int unit = 0;
  std::vector<std::string> labels;
  std::vector<int> rank;  // chain position of each element, 0 = bottom
  std::vector<int> ell, r;

  bool leq(int i, int j) const { return rank[i] <= rank[j]; }
  int meet(int i, int j) const { return rank[i] <= rank[j] ? i : j; }
  int join(int i, int j) const { return rank[i] <= rank[j] ? j : i; }
};

// Conditions 1-5 of the idempotent Galois connection definition, witnessed.
Report verify_igc(const IdGaloisConn& g);

IdGaloisConn igc_reduct(const FinResLat& a);          // requires idempotent chain
FinResLat residuated_from_igc(const IdGaloisConn& g); // requires verify_igc to pass

// x sqsubseteq y iff xy = x; x <=_n y iff xy = yx = x.
std::vector<std::uint8_t> monoidal_preorder(const FinResLat& a);
std::vector<std::uint8_t> natural_order(const FinResLat& a);

EMP to_emp(const FinResLat& a);     // requires idempotent chain
FinResLat from_emp(const EMP& p);   // mutual inverse of to_emp

enum class PairClass : std::uint8_t { L, R, C };

// Requires a positive, b negative, and the pair in one of the three
// configurations; checks all equivalent characterizations agree.
PairClass classify_pair(const FinResLat& a, int pos, int neg);

// Least subset containing seeds and 1 closed under ^star and ^partner;
// cross-checked against closure under all operations.
std::uint64_t generate_subalgebra(const FinResLat& a, std::uint64_t seeds);

struct Crown {
  CrownType type;
  std::vector<int> elements;  // ambient indices of the one-generated piece
};

struct CrownDecomposition {
  std::vector<Crown> crowns;  // bottom to top along the nested-sum index chain
};

// Star-involutive chains split into one-generated pieces, each a finite crown.
CrownDecomposition crown_decomposition(const FinResLat& a);

// Nested sum: summands listed bottom (outermost) to top (innermost); all unit
// elements are identified. Side condition: in every non-top summand no
// non-identity element may have an inverse equal to 1, and no two
// non-identity elements may join or meet to 1.
FinResLat nested_sum(const std::vector<FinResLat>& summands);
EMP nested_sum_emp(const std::vector<EMP>& summands);

}  // namespace ircl

#endif
