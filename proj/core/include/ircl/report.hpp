// report.hpp --- error codes, witness-carrying exceptions, and check reports.
#ifndef IRCL_REPORT_HPP
#define IRCL_REPORT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ircl {

enum class Errc {
  NotALattice,
  NotResiduated,
  NotAssociative,
  UnitFailure,
  NotMonotone,
  NotConic,
  NotAChain,
  NotIdempotent,
  NotStarInvolutive,
  NotRigid,
  NotConjunctive,
  NotCommutative,
  NotReduced,
  NotSemiconicIdempotent,
  InvalidEMP,
  InvalidIGC,
  InvalidSystem,
  SideConditionViolated,
  NucleusViolation,
  NotConfigured,
  BoundExceeded,
  CepFailure,
  UnknownName,
  UnknownFigure,
  BadInput,
  Internal,
};

const char* errc_name(Errc c);

// Every failure carries a witness (a counterexample tuple rendered as text).
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

// Outcome of a multi-condition verification. Failing items keep their witness.
struct Report {
  struct Item {
    std::string check;
    bool pass = true;
    std::string detail;
  };

  std::vector<Item> items;

  void add(std::string check, bool pass, std::string detail = "") {
    items.push_back({std::move(check), pass, std::move(detail)});
  }
  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  std::string to_string() const;
};

}  // namespace ircl

#endif
