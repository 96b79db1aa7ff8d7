// render.hpp --- DOT output: Hasse diagrams, two-column enhanced monoidal
// preorders, and flow diagrams of the inversion maps.
#ifndef IRCL_TOOLS_RENDER_HPP
#define IRCL_TOOLS_RENDER_HPP

#include <string>

#include "ircl/finreslat.hpp"

namespace ircl::render {

enum class View { Hasse, Emp, Flow };

View view_from_name(const std::string& name);
std::string to_dot(const FinResLat& a, View view, const std::string& name);

}  // namespace ircl::render

#endif
