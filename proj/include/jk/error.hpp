#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jk {

/// Every failure the library can signal, so callers (and the CLI exit-code
/// mapping) can tell bad input, violated preconditions and resource caps apart.
enum class ErrKind : std::uint8_t {
  invalid_parameter,        // bad argument value (degree 0, odd dihedral order, ...)
  invalid_table,            // multiplication table fails a group axiom
  degree_mismatch,          // permutations of different degree combined
  parse_error,              // malformed file / unparseable input
  unknown_family,           // family name not recognized
  not_subgroup,             // member set is not a subgroup / not contained as required
  not_normal,               // subgroup fails normality precondition
  not_abelian,              // subgroup fails abelian precondition
  action_not_automorphism,  // semidirect action image is not an automorphism
  action_not_homomorphism,  // semidirect action is not a homomorphism
  center_not_trivial,       // centerless-bound precondition violated
  not_tabulated,            // value absent from the source table (no guessing)
  not_applicable,           // formula outside its stated range
  cap_exceeded,             // structural cap or search budget exhausted
};

const char* to_string(ErrKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace jk
