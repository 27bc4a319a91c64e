#pragma once

#include <stdexcept>
#include <string>

namespace affdia {

enum class Err {
  DegenerateInput,
  DimensionMismatch,
  Infeasible,
  Unbounded,
  SingularSystem,
  NotSupported,
  BoundViolated,
  NotGeneralPosition,
  MismatchedPaths,
  FormulaMismatch,
  OnExceptionalSet,
  GaugeDegenerate,
  NotStronglyGeneralPosition,
  MeasureMismatch,
  PositionCheckFailed,
  InfeasibleLambda,
  ParseError,
  InvalidInput,
  InternalError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::DegenerateInput: return "degenerate_input";
    case Err::DimensionMismatch: return "dimension_mismatch";
    case Err::Infeasible: return "infeasible";
    case Err::Unbounded: return "unbounded";
    case Err::SingularSystem: return "singular_system";
    case Err::NotSupported: return "not_supported";
    case Err::BoundViolated: return "bound_violated";
    case Err::NotGeneralPosition: return "not_general_position";
    case Err::MismatchedPaths: return "mismatched_paths";
    case Err::FormulaMismatch: return "formula_mismatch";
    case Err::OnExceptionalSet: return "on_exceptional_set";
    case Err::GaugeDegenerate: return "gauge_degenerate";
    case Err::NotStronglyGeneralPosition: return "not_strongly_general_position";
    case Err::MeasureMismatch: return "measure_mismatch";
    case Err::PositionCheckFailed: return "position_check_failed";
    case Err::InfeasibleLambda: return "infeasible_lambda";
    case Err::ParseError: return "parse_error";
    case Err::InvalidInput: return "invalid_input";
    case Err::InternalError: return "internal_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, Err kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace affdia
