#include "render.hpp"

#include <sstream>

#include "ircl/chains.hpp"

namespace ircl::render {

View view_from_name(const std::string& name) {
  if (name == "hasse") return View::Hasse;
  if (name == "emp") return View::Emp;
  if (name == "flow") return View::Flow;
  fail(Errc::BadInput, "unknown view " + name);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node_id(int i) { return "n" + std::to_string(i); }

void emit_node(std::ostringstream& os, const FinResLat& a, int i, bool central_shapes) {
  os << "  " << node_id(i) << " [label=" << quoted(a.label(i));
  if (central_shapes) os << ", shape=" << (a.central(i) ? "ellipse" : "box");
  else os << ", shape=plaintext";
  os << "];\n";
}

std::string hasse(const FinResLat& a, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  os << "  rankdir=BT;\n";
  for (int i = 0; i < a.size(); ++i) emit_node(os, a, i, false);
  for (auto [lo, hi] : a.order().cover_pairs())
    os << "  " << node_id(lo) << " -> " << node_id(hi) << " [dir=none];\n";
  os << "}\n";
  return os.str();
}

std::string emp_view(const FinResLat& a, const std::string& name) {
  EMP p = to_emp(a);
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  os << "  rankdir=BT;\n";
  // one rank per layer; positives (and the unit) sit in the left column
  for (std::size_t li = 0; li < p.layers.size(); ++li) {
    const Layer& l = p.layers[li];
    os << "  { rank=same;";
    if (l.pos >= 0) os << " " << node_id(l.pos) << ";";
    if (l.neg >= 0 && l.neg != l.pos) os << " " << node_id(l.neg) << ";";
    os << " }\n";
  }
  for (int i = 0; i < p.n; ++i) emit_node(os, a, i, true);
  // edges between consecutive layers; horizontal segment for comparable pairs
  for (std::size_t li = 0; li + 1 < p.layers.size(); ++li) {
    const Layer& lo = p.layers[li];
    const Layer& hi = p.layers[li + 1];
    for (int x : {lo.pos, lo.neg}) {
      if (x < 0) continue;
      for (int y : {hi.pos, hi.neg}) {
        if (y < 0 || (hi.kind == LayerKind::Unit && y != hi.pos)) continue;
        os << "  " << node_id(x) << " -> " << node_id(y) << " [dir=none];\n";
      }
    }
    if (lo.kind == LayerKind::PairL)
      os << "  " << node_id(lo.pos) << " -> " << node_id(lo.neg)
         << " [dir=none, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

std::string flow(const FinResLat& a, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  os << "  rankdir=BT;\n";
  for (int i = 0; i < a.size(); ++i) emit_node(os, a, i, true);
  for (int i = 0; i < a.size(); ++i) {
    os << "  " << node_id(i) << " -> " << node_id(a.rinv(i)) << ";\n";
    os << "  " << node_id(i) << " -> " << node_id(a.linv(i)) << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const FinResLat& a, View view, const std::string& name) {
  switch (view) {
    case View::Hasse: return hasse(a, name);
    case View::Emp: return emp_view(a, name);
    case View::Flow: return flow(a, name);
  }
  fail(Errc::Internal, "bad view");
}

}  // namespace ircl::render
