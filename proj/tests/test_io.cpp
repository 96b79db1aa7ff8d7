#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "io.hpp"
#include "ircl/chains.hpp"
#include "ircl/enumerate.hpp"
#include "render.hpp"

using namespace ircl;

namespace {

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

const char* kGoldenFigures[] = {
    "fig_APfails_B",    "fig_APfailsVar_B",          "fig_APfails2_B",
    "fig_APfails3_B",   "fig_samemon_left",          "fig_samemon_right",
    "fig_APfails_C",    "fig_APfailsVar_C",          "fig_APfails2_C",
    "fig_connectedcomponents_A", "fig_connectedcomponents_C",
};

std::string golden_dir() {
  // tests run from the build tree; goldens live next to the sources
  return std::string(IRCL_TEST_GOLDEN_DIR);
}

}  // namespace

TEST_CASE("JSON round trip on the library and small enumerations") {
  auto roundtrip = [&](const FinResLat& a, const std::string& name) {
    std::string first = io::to_json(a, name);
    FinResLat parsed = io::parse_json(first);
    CHECK(parsed.size() == a.size());
    CHECK(is_subalgebra_of(parsed, a));
    std::string second = io::to_json(parsed, name);
    CHECK(first == second);  // byte-stable after one round
  };
  for (const auto& name : library_names()) {
    if (name.find('<') != std::string::npos) continue;
    roundtrip(library(name), name);
  }
  roundtrip(library("sugihara:7"), "sugihara:7");
  for (int n = 1; n <= 4; ++n) {
    int i = 0;
    enumerate_conic(n, [&](const FinResLat& a) { roundtrip(a, "conic" + std::to_string(i++)); });
  }
}

TEST_CASE("EMP text round trip") {
  for (const char* name : {"sugihara:5", "fig_samemon_left", "noncomm_sugihara:2:1"}) {
    FinResLat a = library(name);
    std::string text = io::to_emp_text(a);
    FinResLat parsed = io::parse_emp_text(text);
    CHECK(parsed.size() == a.size());
    CHECK(is_subalgebra_of(parsed, a));
    CHECK(io::to_emp_text(parsed) == text);
  }
  // hand-written file, layers top to bottom
  FinResLat p = io::parse_emp_text("+1\n+a\n-b\n");
  CHECK(p.size() == 3);
  CHECK(isomorphic(p, library("sugihara:3")));
  FinResLat q = io::parse_emp_text("+1\n+a2\n+a1 -b1 L\n-b0\n");
  CHECK(isomorphic(q, library("noncomm_sugihara:1:1")));
  CHECK_THROWS_AS(io::parse_emp_text("-b\n+1\n"), Error);
}

TEST_CASE("JSON emp kind") {
  FinResLat a = library("fig_APfailsVar_C");
  std::string j = io::emp_to_json(a, "v");
  bool was_emp = false;
  FinResLat parsed = io::parse_json(j, nullptr, &was_emp);
  CHECK(was_emp);
  CHECK(is_subalgebra_of(parsed, a));
}

TEST_CASE("golden DOT files for the paper figures") {
  for (const char* name : kGoldenFigures) {
    FinResLat a = library(name);
    for (auto view : {render::View::Hasse, render::View::Emp, render::View::Flow}) {
      if (view == render::View::Emp && !a.flags().chain) continue;
      const char* suffix = view == render::View::Hasse ? "hasse"
                           : view == render::View::Emp ? "emp"
                                                       : "flow";
      std::string dot = render::to_dot(a, view, name);
      CHECK(dot == render::to_dot(a, view, name));  // deterministic
      std::string path = golden_dir() + "/" + std::string(name) + "." + suffix + ".dot";
      std::ifstream in(path);
      REQUIRE_MESSAGE(in.good(), path);
      std::string expected((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      CHECK(dot == expected);
    }
  }
}

TEST_CASE("cli subcommands and exit codes") {
  CHECK(cli_main({"verify", "sugihara:5"}) == 0);
  CHECK(cli_main({"props", "sugihara:3"}) == 0);
  CHECK(cli_main({"library", "list"}) == 0);
  CHECK(cli_main({"library", "show", "fig_APfails_B"}) == 0);
  CHECK(cli_main({"library", "show", "nonesuch"}) == 3);
  CHECK(cli_main({"enumerate", "--kind", "chains", "--size", "5", "--count"}) == 0);
  CHECK(cli_main({"check-failure", "APfails"}) == 0);
  CHECK(cli_main({"check-failure", "bogus"}) == 3);

  std::string bad = tmp_path("ircl_bad.json");
  io::write_file(bad, "{ not json");
  CHECK(cli_main({"verify", bad}) == 3);

  std::string out = tmp_path("ircl_out.json");
  CHECK(cli_main({"emp", "sugihara:5", "--to", tmp_path("ircl_s5.emp")}) == 0);
  CHECK(cli_main({"verify", tmp_path("ircl_s5.emp")}) == 0);
  CHECK(cli_main({"emp", tmp_path("ircl_s5.emp"), "--to", out}) == 0);
  CHECK(cli_main({"verify", out}) == 0);

  CHECK(cli_main({"render", "fig_samemon_left", "--view", "emp", "-o", tmp_path("ircl_l.dot")}) ==
        0);
  CHECK(cli_main({"amalgamate", "trivial", "sugihara:3", "sugihara:3", "--class",
                  "chains-star-inv", "-o", out}) == 0);
  CHECK(cli_main({"verify", out}) == 0);
  CHECK(cli_main({"search-amalgam", "fig_APfails_A", "fig_APfails_B", "fig_APfails_C", "--class",
                  "chains", "--max-size", "6"}) == 2);
  CHECK(cli_main({"decompose", "fig_APfails2_B"}) == 0);
}

TEST_CASE("verify accepts a serialized file identically after a round trip") {
  for (const char* name : {"sugihara:5", "fig_APfails2_B"}) {
    FinResLat a = library(name);
    std::string p1 = tmp_path(std::string("ircl_rt1_") + name + ".json");
    io::write_file(p1, io::to_json(a, name));
    CHECK(cli_main({"verify", p1}) == 0);
    auto loaded = io::load(p1);
    std::string p2 = tmp_path(std::string("ircl_rt2_") + name + ".json");
    io::write_file(p2, io::to_json(loaded.algebra, loaded.name));
    CHECK(io::read_file(p1) == io::read_file(p2));
  }
}
