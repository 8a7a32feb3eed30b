#pragma once

#include <stdexcept>
#include <string>

namespace sact {

/// Machine-checkable failure categories. Every throwing operation in the
/// library reports one of these so callers can dispatch without parsing
/// message text.
enum class errc {
  non_associative,
  bad_identity,
  compatibility_violation,
  unit_violation,
  not_equivariant,
  monoid_mismatch,
  act_mismatch,
  not_a_partition,
  not_a_congruence,
  invalid_system,
  not_a_subact,
  bound_exceeded,
  empty_candidate_set,
  not_hoehnke,
  not_ka,
  not_a_torsion_theory,
  parse_error,
  unknown_target,
};

inline const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::non_associative: return "non_associative";
    case errc::bad_identity: return "bad_identity";
    case errc::compatibility_violation: return "compatibility_violation";
    case errc::unit_violation: return "unit_violation";
    case errc::not_equivariant: return "not_equivariant";
    case errc::monoid_mismatch: return "monoid_mismatch";
    case errc::act_mismatch: return "act_mismatch";
    case errc::not_a_partition: return "not_a_partition";
    case errc::not_a_congruence: return "not_a_congruence";
    case errc::invalid_system: return "invalid_system";
    case errc::not_a_subact: return "not_a_subact";
    case errc::bound_exceeded: return "bound_exceeded";
    case errc::empty_candidate_set: return "empty_candidate_set";
    case errc::not_hoehnke: return "not_hoehnke";
    case errc::not_ka: return "not_ka";
    case errc::not_a_torsion_theory: return "not_a_torsion_theory";
    case errc::parse_error: return "parse_error";
    case errc::unknown_target: return "unknown_target";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string const& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Parse failure in a fixture file; carries the 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, int line, int column = 1)
      : Error(errc::parse_error,
              "line " + std::to_string(line) + ":" + std::to_string(column) +
                  ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] inline void fail(errc code, std::string const& what) {
  throw Error(code, what);
}

}  // namespace sact
