// finreslat.hpp --- finite residuated lattices: dense tables, axiom checking,
// and the derived structure of conic idempotent algebras (inverses, stars,
// the nucleus, skeleton and blocks).
#ifndef IRCL_FINRESLAT_HPP
#define IRCL_FINRESLAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ircl/poset.hpp"
#include "ircl/report.hpp"

namespace ircl {

struct PropertyFlags {
  bool idempotent = false;
  bool commutative = false;
  bool integral = false;
  bool conic = false;
  bool chain = false;
  bool distributive = false;
  bool quasi_involutive = false;
  bool star_involutive = false;
  bool rigid = false;
  bool conjunctive = false;
  // Decided by the congruence machinery (see congr.hpp); not stored here.
  std::optional<bool> semiconic;
};

enum class Sign : std::uint8_t { Negative, Positive, Both };

enum class BlockKind : std::uint8_t { Trivial, Brouwerian, Lattice, ProperPrelattice };

// Immutable once built. All tables are row-major n*n; elements are indices
// 0..n-1 carrying string labels. Residual tables are always derived from the
// product and the order; residuals supplied by a caller are only checked.
class FinResLat {
 public:
  static FinResLat build(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& covers,
                         const std::vector<std::uint8_t>& mult, int unit,
                         const std::vector<std::uint8_t>* expect_ld = nullptr,
                         const std::vector<std::uint8_t>* expect_rd = nullptr);
  static FinResLat build_on_poset(std::vector<std::string> labels, Poset order,
                                  const std::vector<std::uint8_t>& mult, int unit,
                                  const std::vector<std::uint8_t>* expect_ld = nullptr,
                                  const std::vector<std::uint8_t>* expect_rd = nullptr);
  static FinResLat trivial();

  int size() const { return n_; }
  int unit() const { return unit_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 when absent
  const Poset& order() const { return order_; }

  bool leq(int i, int j) const { return order_.leq(i, j); }
  bool lt(int i, int j) const { return order_.lt(i, j); }
  int meet(int i, int j) const { return meet_[i * n_ + j]; }
  int join(int i, int j) const { return join_[i * n_ + j]; }
  int mult(int i, int j) const { return mult_[i * n_ + j]; }
  int ld(int x, int z) const { return ld_[x * n_ + z]; }  // x \ z
  int rd(int z, int y) const { return rd_[z * n_ + y]; }  // z / y

  // Inverse operations and their meets/joins (conic idempotent setting).
  int linv(int x) const { return rd(unit_, x); }  // x^l = 1/x
  int rinv(int x) const { return ld(x, unit_); }  // x^r = x\1
  int star_lo(int x) const;                       // x^star = x^l /\ x^r
  int star_hi(int x) const;                       // x^*    = x^l \/ x^r
  bool central(int x) const;                      // x^l == x^r
  int partner(int x) const;                       // x if central, else x^*
  int gamma(int x) const;                         // x^{lr} /\ x^{rl}
  Sign sign(int x) const;

  // lambda_x(a) = (x\ax) /\ 1,  rho_x(a) = (xa/x) /\ 1
  std::pair<int, int> conjugates(int x, int a) const;

  const PropertyFlags& flags() const { return flags_; }

  std::string tuple(std::initializer_list<int> elems) const;

 private:
  int n_ = 0;
  int unit_ = 0;
  std::vector<std::string> labels_;
  Poset order_;
  std::vector<std::uint8_t> mult_, meet_, join_, ld_, rd_;
  PropertyFlags flags_;

  void derive_and_check(const std::vector<std::uint8_t>* expect_ld,
                        const std::vector<std::uint8_t>* expect_rd);
  void compute_flags();
};

// Full axiom suite as a report (never throws); build() enforces the same
// checks and throws on the first failure.
Report verify_algebra(const FinResLat& a);

// Predicates with counterexample witnesses. The flag cache holds the same
// values; these recompute and explain.
bool is_idempotent(const FinResLat& a, std::string* witness = nullptr);
bool is_commutative(const FinResLat& a, std::string* witness = nullptr);
bool is_integral(const FinResLat& a, std::string* witness = nullptr);
bool is_conic(const FinResLat& a, std::string* witness = nullptr);
bool is_chain(const FinResLat& a, std::string* witness = nullptr);
bool is_distributive(const FinResLat& a, std::string* witness = nullptr);
bool is_quasi_involutive(const FinResLat& a, std::string* witness = nullptr);
bool is_star_involutive(const FinResLat& a, std::string* witness = nullptr);
bool is_rigid(const FinResLat& a, std::string* witness = nullptr);
bool is_conjunctive(const FinResLat& a, std::string* witness = nullptr);

void require_conic_idempotent(const FinResLat& a);

// gamma is a nucleus whose image is the skeleton (conic idempotent inputs).
Report verify_nucleus(const FinResLat& a);

// View of a subalgebra: the induced algebra plus its elements in the parent.
struct SubAlgebra {
  FinResLat algebra;
  std::vector<int> parent_index;  // algebra element i -> parent element
};

bool subuniverse_closed(const FinResLat& a, std::uint64_t subset, std::string* witness = nullptr);
SubAlgebra induced_subalgebra(const FinResLat& a, std::uint64_t subset);
// All subuniverses (as bitmasks) of a, unit always included.
std::vector<std::uint64_t> all_subuniverses(const FinResLat& a);
// Label-based literal inclusion test: every element of a appears in b with
// the same order and operations.
bool is_subalgebra_of(const FinResLat& a, const FinResLat& b, std::string* witness = nullptr);

// The totally ordered quasi-involutive subalgebra on the inverse elements.
SubAlgebra skeleton(const FinResLat& a);

struct BlockView {
  int skel_element = 0;            // element of the ambient algebra
  std::vector<int> elems;          // ambient indices, block top included
  BlockKind kind = BlockKind::Trivial;
};

// gamma-fibers indexed by skeleton elements, bottom to top.
std::vector<BlockView> blocks(const FinResLat& a);
BlockKind block_kind(const FinResLat& a, int skel_element);

FinResLat direct_product(const FinResLat& a, const FinResLat& b);
bool isomorphic(const FinResLat& a, const FinResLat& b);

}  // namespace ircl

#endif
