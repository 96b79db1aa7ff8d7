// congr.hpp --- congruence filters, filter generation via the s/t terms,
// congruence lattices, FSI/SI tests, CEP checking, finite semiconicity.
#ifndef IRCL_CONGR_HPP
#define IRCL_CONGR_HPP

#include <cstdint>
#include <vector>

#include "ircl/finreslat.hpp"

namespace ircl {

// A congruence filter as a bitmask: contains 1, upward closed, closed under
// multiplication and under the conjugation maps.
using CongFilter = std::uint64_t;

struct Congruence {
  std::vector<int> cls;  // class id per element, ids dense from 0
  int classes = 0;
  bool trivial() const { return classes == static_cast<int>(cls.size()); }
  bool total() const { return classes == 1; }
  bool operator==(const Congruence& o) const { return cls == o.cls; }
};

bool is_congruence_filter(const FinResLat& a, CongFilter f, std::string* witness = nullptr);

// s_n(y) = y /\ meet of all y^{c1 c1 ... cn cn}; t_n(y) = 1 /\ s_n(y);
// s_iter is the n-fold composition of s_1.
int s_term(const FinResLat& a, int y, int n);
int t_term(const FinResLat& a, int y, int n);
int s_iter(const FinResLat& a, int y, int n);
int s_stabilization(const FinResLat& a, int y);  // least n with s^{n+1} = s^n

// Fixpoint closure under the filter conditions; works in any algebra.
CongFilter generate_filter_oracle(const FinResLat& a, std::uint64_t seeds);
// The closed-form generation for semiconic idempotent algebras.
CongFilter generate_filter_formula(const FinResLat& a, std::uint64_t seeds);

Congruence congruence_from_filter(const FinResLat& a, CongFilter f);
CongFilter filter_from_congruence(const FinResLat& a, const Congruence& th);

std::vector<CongFilter> enumerate_filters(const FinResLat& a);
std::vector<Congruence> enumerate_congruences(const FinResLat& a);

FinResLat quotient(const FinResLat& a, const Congruence& th);

bool is_fsi(const FinResLat& a);
bool is_si(const FinResLat& a);

// Every subalgebra congruence extends to the whole algebra.
Report check_cep(const FinResLat& b);

// Exact finite test: every subdirectly irreducible quotient is conic.
bool is_semiconic_finite(const FinResLat& a);
// Bounded evaluation of the conjugate identity schema; necessary, not
// sufficient, at fixed depth.
bool check_semiconic_schema(const FinResLat& a, int depth);

// x v y = 1 implies s_n(x) v s_m(y) = 1 for all stabilized exponents.
Report check_join_one_implication(const FinResLat& a);

void require_semiconic_idempotent(const FinResLat& a);

}  // namespace ircl

#endif
