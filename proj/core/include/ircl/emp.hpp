// emp.hpp --- enhanced monoidal preorders stored as canonical layer stacks.
// Layers run bottom to top; the top layer is always the unit alone. A pair
// layer holds one positive and one negative element that either form a
// left-zero (L, mutually comparable) or right-zero (R, incomparable) pair.
#ifndef IRCL_EMP_HPP
#define IRCL_EMP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ircl/report.hpp"

namespace ircl {

enum class LayerKind : std::uint8_t { Neg, Pos, PairL, PairR, Unit };

struct Layer {
  LayerKind kind;
  int pos = -1;  // element index, -1 when absent
  int neg = -1;
  int size() const { return (pos >= 0) + (neg >= 0); }
};

struct EMP {
  int n = 0;
  int unit = 0;
  std::vector<std::string> labels;
  std::vector<Layer> layers;      // bottom to top, last is LayerKind::Unit
  std::vector<int> layer_of;      // element -> layer index
  std::vector<int> star;          // the ^star map
  std::vector<std::uint8_t> pre;  // n*n monoidal preorder matrix (derived)

  bool sqsubseteq(int x, int y) const { return pre[x * n + y]; }
  bool sqsubset(int x, int y) const { return sqsubseteq(x, y) && !sqsubseteq(y, x); }
  bool positive(int x) const;
  bool negative(int x) const;
  int partner(int x) const;  // same-layer companion; x itself when central

  // Layer kinds bottom to top; equal encodings iff isomorphic chains.
  std::vector<std::uint8_t> canonical_code() const;

  static EMP from_layers(const std::vector<Layer>& layers, std::vector<std::string> labels,
                         int unit);
  // Validates the raw data against the axioms (sole maximum, totally ordered
  // cones, star conditions, layeredness) and recovers the layer stack.
  static EMP from_raw(int n, std::vector<std::string> labels, const std::vector<std::uint8_t>& pre,
                      const std::vector<std::uint8_t>& positive_cone,
                      const std::vector<std::uint8_t>& negative_cone, const std::vector<int>& star,
                      int unit);
};

// All five axioms with witnesses; condition indices match the definition.
Report verify_emp(const EMP& p);

// Crown types P_{n,L}; only the finite kind is constructible here.
struct CrownType {
  enum Kind { Z, N, Ndual, Finite } kind = Finite;
  int pairs = 0;                // n in P_{n,L}
  std::vector<int> left_ties;   // 1-based indices of L-tagged pair layers
  bool operator==(const CrownType& o) const = default;
};

std::optional<CrownType> is_vertical_crown(const EMP& p);
// The enhanced monoidal preorder of the crown P_{n,L}.
EMP crown_emp(int pairs, const std::vector<int>& left_ties, const std::string& label_prefix = "");

}  // namespace ircl

#endif
