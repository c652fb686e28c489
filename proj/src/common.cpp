#include <cstdlib>
#include <string>

#include "jk/caps.hpp"
#include "jk/error.hpp"

namespace jk {

const char* to_string(ErrKind k) {
  switch (k) {
    case ErrKind::invalid_parameter: return "invalid_parameter";
    case ErrKind::invalid_table: return "invalid_table";
    case ErrKind::degree_mismatch: return "degree_mismatch";
    case ErrKind::parse_error: return "parse_error";
    case ErrKind::unknown_family: return "unknown_family";
    case ErrKind::not_subgroup: return "not_subgroup";
    case ErrKind::not_normal: return "not_normal";
    case ErrKind::not_abelian: return "not_abelian";
    case ErrKind::action_not_automorphism: return "action_not_automorphism";
    case ErrKind::action_not_homomorphism: return "action_not_homomorphism";
    case ErrKind::center_not_trivial: return "center_not_trivial";
    case ErrKind::not_tabulated: return "not_tabulated";
    case ErrKind::not_applicable: return "not_applicable";
    case ErrKind::cap_exceeded: return "cap_exceeded";
  }
  return "unknown";
}

Caps Caps::from_env() {
  Caps caps;
  if (const char* raw = std::getenv("JORDAN_KIT_CAP")) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(raw, &pos);
    } catch (const std::exception&) {
      fail(ErrKind::invalid_parameter, std::string("JORDAN_KIT_CAP is not a number: ") + raw);
    }
    if (pos != std::string(raw).size() || v == 0)
      fail(ErrKind::invalid_parameter, std::string("JORDAN_KIT_CAP is not a positive integer: ") + raw);
    caps.closure_cap = static_cast<std::size_t>(v);
  }
  return caps;
}

}  // namespace jk
