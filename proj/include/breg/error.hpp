#pragma once

#include <stdexcept>
#include <string>

namespace breg {

enum class Err {
  invalid_conductor,
  zero_divisor,
  field_mismatch,
  invalid_index,
  singular_matrix,
  alphabet_mismatch,
  evaluation,
  not_a_relator,
  non_unit,
  rewrite_validation,
  precondition,
  dimension,
  convergence_risk,
  not_a_cycle,
  simplification_violation,
  checkpoint,
  invalid_input,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace breg
