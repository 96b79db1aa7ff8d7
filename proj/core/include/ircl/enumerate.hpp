// enumerate.hpp --- exhaustive generation of idempotent residuated chains
// (layer sequences) and conic idempotent algebras (decomposition systems),
// isomorph rejection, and the named-algebra library.
#ifndef IRCL_ENUMERATE_HPP
#define IRCL_ENUMERATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "ircl/decomp.hpp"
#include "ircl/emp.hpp"
#include "ircl/finreslat.hpp"

namespace ircl {

using AlgebraSink = std::function<void(const FinResLat&)>;

// All idempotent residuated chains with n elements, one per isomorphism
// class, in canonical layer-sequence order.
void enumerate_chains(int n, const AlgebraSink& sink);
std::vector<FinResLat> enumerate_chains(int n);

// Chains whose layer stack splits into crown bodies (star-involutive), and
// chains all of whose elements are inverses (quasi-involutive skeletons).
void enumerate_star_involutive_chains(int n, const AlgebraSink& sink);
void enumerate_quasi_involutive_chains(int n, const AlgebraSink& sink);

// All conic idempotent residuated lattices with n elements up to isomorphism,
// generated as decomposition systems over quasi-involutive skeletons.
void enumerate_conic(int n, const AlgebraSink& sink);
std::vector<FinResLat> enumerate_conic(int n);
// The finitely subdirectly irreducible stream: 1 join-irreducible.
void enumerate_semiconic_fsi(int n, const AlgebraSink& sink);

// Total byte encoding, minimal over element permutations; equal encodings
// iff isomorphic. Chains use their layer-sequence code.
std::vector<std::uint8_t> canonical_form(const FinResLat& a);

// Named algebras: sugihara:<2k+1>, noncomm_sugihara:<k>:<J>, and the figure
// algebras / V-formation components.
FinResLat library(const std::string& name);
std::vector<std::string> library_names();

FinResLat sugihara_chain(int size);  // odd size
FinResLat noncomm_sugihara(int k, const std::vector<int>& left_ties);

}  // namespace ircl

#endif
