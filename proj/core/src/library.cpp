// library.cpp --- the named algebras: Sugihara chains, their non-commutative
// crown analogues, and the figure algebras used by the amalgamation results.
#include <map>
#include <sstream>

#include "ircl/chains.hpp"
#include "ircl/decomp.hpp"
#include "ircl/enumerate.hpp"

namespace ircl {

FinResLat sugihara_chain(int size) {
  if (size < 1 || size % 2 == 0) fail(Errc::BadInput, "sugihara chains have odd size");
  int k = (size - 1) / 2;
  std::vector<Layer> layers;
  std::vector<std::string> labels;
  auto add = [&](const std::string& s) {
    labels.push_back(s);
    return static_cast<int>(labels.size()) - 1;
  };
  for (int i = 1; i <= k; ++i) {
    layers.push_back(Layer{LayerKind::Neg, -1, add("b" + std::to_string(i))});
    layers.push_back(Layer{LayerKind::Pos, add("a" + std::to_string(i)), -1});
  }
  int unit = add("1");
  layers.push_back(Layer{LayerKind::Unit, unit, -1});
  return from_emp(EMP::from_layers(layers, std::move(labels), unit));
}

FinResLat noncomm_sugihara(int k, const std::vector<int>& left_ties) {
  if (k < 0) fail(Errc::BadInput, "noncomm_sugihara needs k >= 0");
  for (int i : left_ties)
    if (i < 1 || i > k) fail(Errc::BadInput, "left-tie index out of range");
  return from_emp(crown_emp(k, left_ties));
}

namespace {

FinResLat chain_from_stack(const std::vector<std::pair<LayerKind, std::vector<std::string>>>& stack) {
  // stack entries bottom to top: (kind, labels); pair layers list {pos, neg}
  std::vector<Layer> layers;
  std::vector<std::string> labels;
  auto add = [&](const std::string& s) {
    labels.push_back(s);
    return static_cast<int>(labels.size()) - 1;
  };
  for (const auto& [kind, names] : stack) {
    Layer l{kind, -1, -1};
    switch (kind) {
      case LayerKind::Neg: l.neg = add(names[0]); break;
      case LayerKind::Pos: l.pos = add(names[0]); break;
      case LayerKind::PairL:
      case LayerKind::PairR:
        l.pos = add(names[0]);
        l.neg = add(names[1]);
        break;
      case LayerKind::Unit: l.pos = add(names[0]); break;
    }
    layers.push_back(l);
  }
  int unit = layers.back().pos;
  return from_emp(EMP::from_layers(layers, std::move(labels), unit));
}

// A "span" block: m incomparable elements under the shared top.
DecompBlock span_block(const std::string& top, const std::vector<std::string>& atoms) {
  DecompBlock b;
  int m = static_cast<int>(atoms.size()) + 1;
  std::vector<std::uint8_t> leq(m * m, 0);
  for (int i = 0; i < m; ++i) leq[i * m + i] = 1;
  for (int i = 0; i + 1 < m; ++i) leq[i * m + (m - 1)] = 1;
  b.labels = atoms;
  b.labels.push_back(top);
  b.order = Poset::from_leq(m, leq);
  b.top = m - 1;
  return b;
}

DecompBlock point_block(const std::string& top) {
  DecompBlock b;
  b.labels = {top};
  b.order = Poset::antichain(1);
  b.top = 0;
  return b;
}

// The figure algebras with two span blocks on a Sugihara skeleton.
FinResLat two_span_conic(const FinResLat& skel, const std::string& hi,
                         const std::vector<std::string>& hi_atoms, const std::string& lo,
                         const std::vector<std::string>& lo_atoms) {
  DecompSystem d;
  d.skeleton = skel;
  d.blocks.resize(skel.size());
  for (int s = 0; s < skel.size(); ++s) {
    if (skel.label(s) == hi) d.blocks[s] = span_block(hi, hi_atoms);
    else if (skel.label(s) == lo) d.blocks[s] = span_block(lo, lo_atoms);
    else d.blocks[s] = point_block(skel.label(s));
  }
  return build_algebra(d);
}

FinResLat sugihara_with_labels(const std::vector<std::string>& stack_labels) {
  // odd chain given as alternating Neg/Pos singleton labels bottom to top
  std::vector<std::pair<LayerKind, std::vector<std::string>>> stack;
  for (std::size_t i = 0; i + 1 < stack_labels.size(); ++i)
    stack.push_back({i % 2 == 0 ? LayerKind::Neg : LayerKind::Pos, {stack_labels[i]}});
  stack.push_back({LayerKind::Unit, {stack_labels.back()}});
  return chain_from_stack(stack);
}

std::vector<int> parse_tie_set(const std::string& s) {
  std::vector<int> ties;
  if (s.empty() || s == "{}") return ties;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ties.push_back(std::stoi(item));
  return ties;
}

}  // namespace

std::vector<std::string> library_names() {
  return {
      "trivial",
      "sugihara:<odd size>",
      "noncomm_sugihara:<k>:<comma-separated left ties or {}>",
      "fig_APfails_A", "fig_APfails_B", "fig_APfails_C",
      "fig_APfailsVar_A", "fig_APfailsVar_B", "fig_APfailsVar_C",
      "fig_APfails2_A", "fig_APfails2_B", "fig_APfails2_C",
      "fig_APfails3_A", "fig_APfails3_B", "fig_APfails3_C",
      "fig_samemon_left", "fig_samemon_right",
      "fig_connectedcomponents_A", "fig_connectedcomponents_C",
  };
}

FinResLat library(const std::string& name) {
  if (name == "trivial") return FinResLat::trivial();
  if (name.rfind("sugihara:", 0) == 0) return sugihara_chain(std::stoi(name.substr(9)));
  if (name.rfind("noncomm_sugihara:", 0) == 0) {
    std::string rest = name.substr(17);
    auto colon = rest.find(':');
    int k = std::stoi(rest.substr(0, colon));
    std::vector<int> ties =
        colon == std::string::npos ? std::vector<int>{} : parse_tie_set(rest.substr(colon + 1));
    return noncomm_sugihara(k, ties);
  }
  if (name == "fig_APfails_A") return FinResLat::trivial();
  if (name == "fig_APfails_B")
    return chain_from_stack({{LayerKind::Neg, {"b2"}},
                             {LayerKind::PairL, {"a3", "b3"}},
                             {LayerKind::Unit, {"1"}}});
  if (name == "fig_APfails_C")
    return chain_from_stack({{LayerKind::Neg, {"b1'"}},
                             {LayerKind::PairL, {"a2'", "b2'"}},
                             {LayerKind::PairL, {"a3'", "b3'"}},
                             {LayerKind::Unit, {"1"}}});
  if (name == "fig_APfailsVar_A")
    return chain_from_stack(
        {{LayerKind::Neg, {"b"}}, {LayerKind::Pos, {"a"}}, {LayerKind::Unit, {"1"}}});
  if (name == "fig_APfailsVar_B")
    return chain_from_stack({{LayerKind::Neg, {"bB'"}},
                             {LayerKind::PairR, {"aB", "bB"}},
                             {LayerKind::Neg, {"b"}},
                             {LayerKind::Pos, {"a"}},
                             {LayerKind::Unit, {"1"}}});
  if (name == "fig_APfailsVar_C")
    return chain_from_stack({{LayerKind::Neg, {"bC'"}},
                             {LayerKind::PairL, {"aC", "bC"}},
                             {LayerKind::Neg, {"b"}},
                             {LayerKind::Pos, {"a"}},
                             {LayerKind::Unit, {"1"}}});
  if (name == "fig_APfails2_A" || name == "fig_APfails3_A")
    return sugihara_with_labels({"a*", "a", "1"});
  if (name == "fig_APfails2_B")
    return two_span_conic(sugihara_with_labels({"a*", "a", "b*", "b", "1"}), "a", {"b1", "b2"},
                          "b", {"b1'", "b2'"});
  if (name == "fig_APfails2_C" || name == "fig_APfails3_C")
    return two_span_conic(sugihara_with_labels({"a*", "a", "c*", "c", "d*", "d", "1"}), "a",
                          {"c1", "c2"}, "d", {"d1", "d2"});
  if (name == "fig_APfails3_B")
    return two_span_conic(sugihara_with_labels({"a*", "a", "b*", "b", "1"}), "a",
                          {"b1", "b2", "b3"}, "b", {"b1'", "b2'", "b3'"});
  if (name == "fig_samemon_left" || name == "fig_connectedcomponents_A")
    return chain_from_stack({{LayerKind::Neg, {"b1"}},
                             {LayerKind::PairR, {"a2", "b2"}},
                             {LayerKind::Pos, {"a3"}},
                             {LayerKind::Neg, {"b4"}},
                             {LayerKind::PairL, {"a5", "b5"}},
                             {LayerKind::Unit, {"1"}}});
  if (name == "fig_samemon_right" || name == "fig_connectedcomponents_C")
    return chain_from_stack({{LayerKind::Neg, {"b1"}},
                             {LayerKind::PairR, {"a2", "b2"}},
                             {LayerKind::Neg, {"b3"}},
                             {LayerKind::Neg, {"b4"}},
                             {LayerKind::PairL, {"a5", "b5"}},
                             {LayerKind::Unit, {"1"}}});
  fail(Errc::UnknownName, name);
}

}  // namespace ircl
