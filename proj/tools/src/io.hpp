// io.hpp --- algebra files: JSON tables, JSON/text enhanced monoidal
// preorders, and loading by library name.
#ifndef IRCL_TOOLS_IO_HPP
#define IRCL_TOOLS_IO_HPP

#include <string>

#include "ircl/emp.hpp"
#include "ircl/finreslat.hpp"

namespace ircl::io {

struct LoadedAlgebra {
  FinResLat algebra;
  std::string name;
  bool was_emp = false;  // input carried only the preorder presentation
};

// Accepts a path to a JSON or EMP text file, or a library name such as
// "sugihara:5" when no such file exists.
LoadedAlgebra load(const std::string& path_or_name);

FinResLat parse_json(const std::string& text, std::string* name = nullptr, bool* was_emp = nullptr);
FinResLat parse_emp_text(const std::string& text);

// Canonical key order, stable across runs.
std::string to_json(const FinResLat& a, const std::string& name);
std::string emp_to_json(const FinResLat& a, const std::string& name);
std::string to_emp_text(const FinResLat& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ircl::io

#endif
