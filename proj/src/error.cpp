#include "polydual/error.hpp"

namespace polydual {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_ring_spec: return "invalid_ring_spec";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::not_a_unit: return "not_a_unit";
    case ErrorCode::ring_mismatch: return "ring_mismatch";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

}  // namespace polydual
