// decomp.hpp --- decomposition systems: a quasi-involutive skeleton chain and
// one topped prelattice block per skeleton element. Conic idempotent algebras
// decompose into such systems and are rebuilt from them as ordinal sums.
#ifndef IRCL_DECOMP_HPP
#define IRCL_DECOMP_HPP

#include <string>
#include <vector>

#include "ircl/finreslat.hpp"
#include "ircl/poset.hpp"

namespace ircl {

struct DecompBlock {
  std::vector<std::string> labels;  // block elements, top included
  Poset order;
  int top = 0;  // index into labels; its label equals the skeleton label
};

struct DecompSystem {
  FinResLat skeleton;               // idempotent residuated chain
  std::vector<DecompBlock> blocks;  // blocks[s] belongs to skeleton element s
  // lower_cover[s] is the skeleton predecessor of s when block s is a proper
  // prelattice, else -1. Derived during validation.
  std::vector<int> lower_cover;
};

// Checks the system invariants: skeleton an idempotent chain; every block a
// topped prelattice; negative blocks Brouwerian lattices; the block of a
// skeleton element without lower cover a lattice; non-central skeleton
// elements carry trivial blocks. Throws InvalidSystem otherwise.
void validate_system(DecompSystem& d);

DecompSystem extract_system(const FinResLat& a);  // conic idempotent input
FinResLat build_algebra(const DecompSystem& d);

// Subsystem test (label-based); cross-checked against the direct subalgebra
// test on the built algebras.
bool is_subsystem(const DecompSystem& da, const DecompSystem& db, std::string* witness = nullptr);

// Semiconic generalized Sugihara monoids among conic idempotent commutative
// algebras: all strictly positive blocks trivial; central variant: all blocks
// except the unit's trivial. Both cross-checked against identity evaluation.
bool is_sgsm(const FinResLat& a);
bool is_central_sgsm(const FinResLat& a);

}  // namespace ircl

#endif
