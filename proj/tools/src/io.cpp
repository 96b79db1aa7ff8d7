#include "io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ircl/chains.hpp"
#include "ircl/enumerate.hpp"

namespace ircl::io {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::BadInput, "cannot write " + path);
  out << content;
}

namespace {

// one layer per line, top to bottom; grammar: +x | -x | +x -y L | +x -y R
std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

EMP emp_from_lines(const std::vector<std::string>& lines) {
  if (lines.empty()) fail(Errc::BadInput, "empty enhanced monoidal preorder");
  if (split_ws(lines[0]) != std::vector<std::string>{"+1"})
    fail(Errc::BadInput, "first line must name the unit as +1");
  std::vector<Layer> layers;
  std::vector<std::string> labels;
  auto add = [&](const std::string& s) {
    labels.push_back(s);
    return static_cast<int>(labels.size()) - 1;
  };
  // read top to bottom, store bottom to top
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : lines) {
    auto toks = split_ws(line);
    if (!toks.empty()) rows.push_back(toks);
  }
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    const auto& toks = *it;
    auto strip_sign = [&](const std::string& t, char sign) {
      if (t.size() < 2 || t[0] != sign) fail(Errc::BadInput, "bad layer token " + t);
      return t.substr(1);
    };
    Layer l{};
    if (toks.size() == 1) {
      if (toks[0][0] == '+') {
        l.kind = LayerKind::Pos;
        l.pos = add(strip_sign(toks[0], '+'));
      } else {
        l.kind = LayerKind::Neg;
        l.neg = add(strip_sign(toks[0], '-'));
      }
    } else if (toks.size() == 3 && (toks[2] == "L" || toks[2] == "R")) {
      l.kind = toks[2] == "L" ? LayerKind::PairL : LayerKind::PairR;
      l.pos = add(strip_sign(toks[0], '+'));
      l.neg = add(strip_sign(toks[1], '-'));
    } else {
      fail(Errc::BadInput, "bad layer line");
    }
    layers.push_back(l);
  }
  // the last stored layer is the unit line
  if (layers.back().kind != LayerKind::Pos) fail(Errc::BadInput, "unit layer malformed");
  layers.back().kind = LayerKind::Unit;
  return EMP::from_layers(layers, std::move(labels), layers.back().pos);
}

std::vector<std::string> emp_lines(const FinResLat& a) {
  EMP p = to_emp(a);
  if (p.labels[p.unit] != "1") fail(Errc::BadInput, "the unit must be labelled 1 for EMP files");
  std::vector<std::string> lines;
  for (auto it = p.layers.rbegin(); it != p.layers.rend(); ++it) {
    const Layer& l = *it;
    switch (l.kind) {
      case LayerKind::Unit: lines.push_back("+1"); break;
      case LayerKind::Pos: lines.push_back("+" + p.labels[l.pos]); break;
      case LayerKind::Neg: lines.push_back("-" + p.labels[l.neg]); break;
      case LayerKind::PairL:
        lines.push_back("+" + p.labels[l.pos] + " -" + p.labels[l.neg] + " L");
        break;
      case LayerKind::PairR:
        lines.push_back("+" + p.labels[l.pos] + " -" + p.labels[l.neg] + " R");
        break;
    }
  }
  return lines;
}

}  // namespace

FinResLat parse_emp_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line[0] == '#') continue;
    lines.push_back(line);
  }
  while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
  return from_emp(emp_from_lines(lines));
}

FinResLat parse_json(const std::string& text, std::string* name, bool* was_emp) {
  ordered_json j = ordered_json::parse(text);
  if (name) *name = j.value("name", "");
  std::string kind = j.value("kind", "table");
  if (kind == "emp") {
    if (was_emp) *was_emp = true;
    std::vector<std::string> lines;
    for (const auto& l : j.at("layers")) lines.push_back(l.get<std::string>());
    return from_emp(emp_from_lines(lines));
  }
  if (kind != "table") fail(Errc::BadInput, "kind must be table or emp");
  if (was_emp) *was_emp = false;
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) labels.push_back(e.get<std::string>());
  auto idx = [&](const std::string& l) {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (labels[i] == l) return i;
    fail(Errc::BadInput, "unknown element " + l);
  };
  int unit = idx(j.at("unit").get<std::string>());
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers"))
    covers.emplace_back(idx(c.at(0).get<std::string>()), idx(c.at(1).get<std::string>()));
  int n = static_cast<int>(labels.size());
  std::vector<std::uint8_t> mult(n * n, 0);
  const auto& mj = j.at("mult");
  for (const auto& [row, cols] : mj.items()) {
    int x = idx(row);
    for (const auto& [col, val] : cols.items())
      mult[x * n + idx(col)] = static_cast<std::uint8_t>(idx(val.get<std::string>()));
  }
  if (mj.size() != static_cast<std::size_t>(n)) fail(Errc::BadInput, "mult table incomplete");
  for (const auto& [row, cols] : mj.items())
    if (cols.size() != static_cast<std::size_t>(n))
      fail(Errc::BadInput, "mult row " + row + " incomplete");
  return FinResLat::build(std::move(labels), covers, mult, unit);
}

std::string to_json(const FinResLat& a, const std::string& name) {
  ordered_json j;
  j["name"] = name;
  j["kind"] = "table";
  j["elements"] = a.labels();
  j["unit"] = a.label(a.unit());
  ordered_json covers = ordered_json::array();
  for (auto [lo, hi] : a.order().cover_pairs())
    covers.push_back(ordered_json::array({a.label(lo), a.label(hi)}));
  j["covers"] = covers;
  ordered_json mult;
  for (int x = 0; x < a.size(); ++x) {
    ordered_json row;
    for (int y = 0; y < a.size(); ++y) row[a.label(y)] = a.label(a.mult(x, y));
    mult[a.label(x)] = row;
  }
  j["mult"] = mult;
  return j.dump(2) + "\n";
}

std::string emp_to_json(const FinResLat& a, const std::string& name) {
  ordered_json j;
  j["name"] = name;
  j["kind"] = "emp";
  j["layers"] = emp_lines(a);
  return j.dump(2) + "\n";
}

std::string to_emp_text(const FinResLat& a) {
  std::string out;
  for (const auto& line : emp_lines(a)) {
    out += line;
    out += '\n';
  }
  return out;
}

LoadedAlgebra load(const std::string& path_or_name) {
  LoadedAlgebra out;
  if (std::filesystem::exists(path_or_name)) {
    std::string text = read_file(path_or_name);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      out.algebra = parse_json(text, &out.name, &out.was_emp);
    } else {
      out.algebra = parse_emp_text(text);
      out.was_emp = true;
    }
    if (out.name.empty()) out.name = std::filesystem::path(path_or_name).stem().string();
    return out;
  }
  out.algebra = library(path_or_name);
  out.name = path_or_name;
  return out;
}

}  // namespace ircl::io
