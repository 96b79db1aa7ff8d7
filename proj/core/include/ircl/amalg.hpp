// amalg.hpp --- V-formations, amalgam certificates, the constructive strong
// amalgamation for star-involutive chains and for rigid conjunctive conic
// algebras, certified block amalgams, bounded exhaustive amalgam search, and
// mechanical replay of the failure arguments.
#ifndef IRCL_AMALG_HPP
#define IRCL_AMALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "ircl/decomp.hpp"
#include "ircl/finreslat.hpp"

namespace ircl {

struct VFormation {
  FinResLat A, B, C;
  std::vector<int> fB, fC;  // embeddings A -> B and A -> C as index maps

  // Builds the V-formation from literal label inclusions.
  static VFormation reduced(FinResLat a, FinResLat b, FinResLat c);
  // A literal common subalgebra with B and C intersecting exactly in A.
  bool is_reduced(std::string* witness = nullptr) const;
  // Relabels C's elements outside the image of A so the formation is reduced.
  VFormation reduce() const;
};

// Embeddings located by shared labels; the result is reduced, relabeling C
// where it overlaps B outside A.
VFormation v_formation_by_labels(FinResLat a, FinResLat b, FinResLat c);

struct AmalgamCert {
  FinResLat D;
  std::vector<int> gB, gC;
  bool strong = false;
};

// Injectivity, homomorphism property, square commutation and the strong
// intersection condition. one_sided relaxes gB to a plain homomorphism. The
// strong condition only gates the report when the certificate claims it.
Report verify_amalgam(const VFormation& v, const AmalgamCert& cert, bool one_sided = false);
bool amalgam_is_strong(const VFormation& v, const AmalgamCert& cert);

// Strong amalgam of star-involutive idempotent chains by merging crown index
// chains. mirror flips the deterministic interleaving rule.
AmalgamCert amalgamate_star_inv_chains(const VFormation& v, bool mirror = false);

// Strong amalgam of rigid conjunctive conic idempotent algebras: skeleton by
// the chain construction, blocks by certified block amalgams.
AmalgamCert amalgamate_rigid_conjunctive_conic(const VFormation& v, int block_bound = 12,
                                               bool mirror = false);

enum class BlockAmalgKind { Lattice, Brouwerian, DistributiveLattice };

struct LabeledPoset {
  Poset order;
  std::vector<std::string> labels;
  int top = 0;
  int index_of(const std::string& l) const;
};

struct BlockAmalgamResult {
  LabeledPoset block;
  std::vector<int> into_b, into_c;  // element maps from the inputs
};

// First certified candidate: the poset pushout, its completion, then a
// bounded catalog search. Never returns an uncertified block.
BlockAmalgamResult block_amalgam(BlockAmalgKind kind, const LabeledPoset& bs,
                                 const LabeledPoset& cs, const LabeledPoset& as, int size_bound);

enum class AmalgClass { Chains, StarInvChains, Conic, ConicFsi };

// Exhaustive search over candidate algebras of the class up to size_bound and
// over all map pairs; first certificate in canonical order, or nullopt.
std::optional<AmalgamCert> search_amalgam(const VFormation& v, AmalgClass cls, int size_bound,
                                          bool one_sided = false);

// Replays the structural deductions of the failure figures step by step,
// computing every cited equation in the library algebras.
Report check_failure_argument(const std::string& figure_id);

}  // namespace ircl

#endif
