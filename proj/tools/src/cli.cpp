#include "cli.hpp"

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "ircl/amalg.hpp"
#include "ircl/chains.hpp"
#include "ircl/congr.hpp"
#include "ircl/decomp.hpp"
#include "ircl/enumerate.hpp"
#include "io.hpp"
#include "render.hpp"

namespace ircl {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kNotFound = 2;
constexpr int kInputError = 3;

void print_flags(const FinResLat& a) {
  auto line = [&](const char* name, bool value, const std::string& witness) {
    std::cout << name << ": " << (value ? "yes" : "no");
    if (!value && !witness.empty()) std::cout << "  (witness " << witness << ")";
    std::cout << "\n";
  };
  std::string w;
  w.clear(); line("idempotent", is_idempotent(a, &w), w);
  w.clear(); line("commutative", is_commutative(a, &w), w);
  w.clear(); line("integral", is_integral(a, &w), w);
  w.clear(); line("conic", is_conic(a, &w), w);
  w.clear(); line("chain", is_chain(a, &w), w);
  w.clear(); line("distributive", is_distributive(a, &w), w);
  w.clear(); line("quasi-involutive", is_quasi_involutive(a, &w), w);
  w.clear(); line("star-involutive", is_star_involutive(a, &w), w);
  w.clear(); line("rigid", is_rigid(a, &w), w);
  w.clear(); line("conjunctive", is_conjunctive(a, &w), w);
  if (a.flags().idempotent) {
    line("semiconic", is_semiconic_finite(a), "");
    if (a.flags().conic && a.flags().commutative) {
      line("semiconic generalized Sugihara monoid", is_sgsm(a), "");
      line("central semiconic generalized Sugihara monoid", is_central_sgsm(a), "");
    }
  }
}

AmalgClass search_class(const std::string& name) {
  if (name == "chains") return AmalgClass::Chains;
  if (name == "star-inv-chains") return AmalgClass::StarInvChains;
  if (name == "conic") return AmalgClass::Conic;
  if (name == "conic-fsi") return AmalgClass::ConicFsi;
  fail(Errc::BadInput, "unknown class " + name);
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"finite workbench for idempotent residuated chains and conic idempotent residuated lattices"};
  app.require_subcommand(1);

  std::string file, out, to_path, view_name = "hasse";
  std::string file_a, file_b, file_c, cls_name, kind_name, emit_dir, lib_cmd, lib_name, figure;
  int max_size = 10, block_bound = 12, size = 1;
  bool one_sided = false, count_only = false;

  auto* verify = app.add_subcommand("verify", "check the residuated lattice axioms");
  verify->add_option("FILE", file)->required();

  auto* props = app.add_subcommand("props", "print all property predicates with witnesses");
  props->add_option("FILE", file)->required();

  auto* emp = app.add_subcommand("emp", "convert between table and preorder presentations");
  emp->add_option("FILE", file)->required();
  emp->add_option("--to", to_path, "output path")->required();

  auto* decompose = app.add_subcommand("decompose", "print the decomposition system");
  decompose->add_option("FILE", file)->required();

  auto* amalgamate = app.add_subcommand("amalgamate", "construct a strong amalgam");
  amalgamate->add_option("A", file_a)->required();
  amalgamate->add_option("B", file_b)->required();
  amalgamate->add_option("C", file_c)->required();
  amalgamate->add_option("--class", cls_name, "chains-star-inv | rigid-conjunctive-conic")
      ->required();
  amalgamate->add_option("--block-bound", block_bound);
  amalgamate->add_option("-o,--output", out);

  auto* search = app.add_subcommand("search-amalgam", "bounded exhaustive amalgam search");
  search->add_option("A", file_a)->required();
  search->add_option("B", file_b)->required();
  search->add_option("C", file_c)->required();
  search->add_option("--class", cls_name, "chains | star-inv-chains | conic | conic-fsi")
      ->required();
  search->add_option("--max-size", max_size)->required();
  search->add_flag("--one-sided", one_sided);
  search->add_option("-o,--output", out);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate algebras up to isomorphism");
  enumerate->add_option("--kind", kind_name, "chains | conic | fsi")->required();
  enumerate->add_option("--size", size)->required();
  enumerate->add_flag("--count", count_only);
  enumerate->add_option("--emit", emit_dir, "directory for JSON files");

  auto* render_cmd = app.add_subcommand("render", "emit a DOT diagram");
  render_cmd->add_option("FILE", file)->required();
  render_cmd->add_option("--view", view_name, "hasse | emp | flow");
  render_cmd->add_option("-o,--output", out)->required();

  auto* lib = app.add_subcommand("library", "list or show named algebras");
  lib->add_option("CMD", lib_cmd, "list | show")->required();
  lib->add_option("NAME", lib_name);

  auto* check_failure = app.add_subcommand("check-failure", "replay a failure argument");
  check_failure->add_option("FIGURE", figure, "APfails | APfailsVar | APfails2 | APfails3")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*verify) {
      auto loaded = io::load(file);
      Report rep = verify_algebra(loaded.algebra);
      std::cout << rep.to_string();
      return rep.ok() ? kOk : kCheckFailed;
    }
    if (*props) {
      auto loaded = io::load(file);
      print_flags(loaded.algebra);
      return kOk;
    }
    if (*emp) {
      auto loaded = io::load(file);
      bool to_json_file = to_path.size() >= 5 && to_path.substr(to_path.size() - 5) == ".json";
      if (loaded.was_emp || to_json_file) {
        io::write_file(to_path, io::to_json(loaded.algebra, loaded.name));
      } else {
        io::write_file(to_path, io::to_emp_text(loaded.algebra));
      }
      return kOk;
    }
    if (*decompose) {
      auto loaded = io::load(file);
      DecompSystem d = extract_system(loaded.algebra);
      std::cout << "skeleton:";
      for (int s = 0; s < d.skeleton.size(); ++s) std::cout << " " << d.skeleton.label(s);
      std::cout << "\n";
      for (int s = 0; s < d.skeleton.size(); ++s) {
        std::cout << "block " << d.skeleton.label(s) << " ("
                  << [&] {
                       switch (block_kind(loaded.algebra,
                                          loaded.algebra.index_of(d.skeleton.label(s)))) {
                         case BlockKind::Trivial: return "trivial";
                         case BlockKind::Brouwerian: return "brouwerian";
                         case BlockKind::Lattice: return "lattice";
                         case BlockKind::ProperPrelattice: return "proper prelattice";
                       }
                       return "?";
                     }()
                  << "):";
        for (const auto& l : d.blocks[s].labels) std::cout << " " << l;
        std::cout << "\n";
      }
      return kOk;
    }
    if (*amalgamate) {
      VFormation v = v_formation_by_labels(io::load(file_a).algebra, io::load(file_b).algebra,
                                         io::load(file_c).algebra);
      AmalgamCert cert;
      if (cls_name == "chains-star-inv") cert = amalgamate_star_inv_chains(v);
      else if (cls_name == "rigid-conjunctive-conic")
        cert = amalgamate_rigid_conjunctive_conic(v, block_bound);
      else fail(Errc::BadInput, "unknown class " + cls_name);
      std::cout << "strong amalgam with " << cert.D.size() << " elements\n";
      if (!out.empty()) io::write_file(out, io::to_json(cert.D, "amalgam"));
      return kOk;
    }
    if (*search) {
      VFormation v = v_formation_by_labels(io::load(file_a).algebra, io::load(file_b).algebra,
                                         io::load(file_c).algebra);
      auto cert = search_amalgam(v, search_class(cls_name), max_size, one_sided);
      if (!cert) {
        std::cout << "no " << (one_sided ? "1-amalgam" : "amalgam") << " up to " << max_size
                  << " in class " << cls_name << "\n";
        return kNotFound;
      }
      std::cout << (cert->strong ? "strong " : "") << "amalgam with " << cert->D.size()
                << " elements\n";
      if (!out.empty()) io::write_file(out, io::to_json(cert->D, "amalgam"));
      return kOk;
    }
    if (*enumerate) {
      int n = 0;
      auto handle = [&](const FinResLat& a) {
        if (!emit_dir.empty()) {
          std::filesystem::create_directories(emit_dir);
          std::string name = kind_name + "_n" + std::to_string(size) + "_i" + std::to_string(n);
          io::write_file(emit_dir + "/" + name + ".json", io::to_json(a, name));
        }
        ++n;
      };
      if (kind_name == "chains") enumerate_chains(size, handle);
      else if (kind_name == "conic") enumerate_conic(size, handle);
      else if (kind_name == "fsi") enumerate_semiconic_fsi(size, handle);
      else fail(Errc::BadInput, "unknown kind " + kind_name);
      if (count_only || emit_dir.empty()) std::cout << n << "\n";
      return kOk;
    }
    if (*render_cmd) {
      auto loaded = io::load(file);
      io::write_file(out,
                     render::to_dot(loaded.algebra, render::view_from_name(view_name), loaded.name));
      return kOk;
    }
    if (*lib) {
      if (lib_cmd == "list") {
        for (const auto& name : library_names()) std::cout << name << "\n";
        return kOk;
      }
      if (lib_cmd == "show") {
        if (lib_name.empty()) fail(Errc::BadInput, "library show needs a name");
        std::cout << io::to_json(library(lib_name), lib_name);
        return kOk;
      }
      fail(Errc::BadInput, "library expects list or show");
    }
    if (*check_failure) {
      Report rep = check_failure_argument(figure);
      std::cout << rep.to_string();
      return rep.ok() ? kOk : kCheckFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::BoundExceeded: return kNotFound;
      case Errc::BadInput:
      case Errc::UnknownName:
      case Errc::UnknownFigure: return kInputError;
      default: return kCheckFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace ircl
