#pragma once

#include <stdexcept>
#include <string>

namespace schromax {

enum class ErrorCode {
  QubitOutOfRange,
  OverlappingQubits,
  NonContiguousRange,
  IndexOutOfRange,
  CapExceeded,
  InvalidArgument,
  CflViolation,
  TruncationViolated,
  NoRecoveryIndex,
  Unexportable,
  StepUnderflow,
  ProfileConflict,
  Config,
  Parse,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::QubitOutOfRange: return "qubit_out_of_range";
    case ErrorCode::OverlappingQubits: return "overlapping_qubits";
    case ErrorCode::NonContiguousRange: return "non_contiguous_range";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::CapExceeded: return "cap_exceeded";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::CflViolation: return "cfl_violation";
    case ErrorCode::TruncationViolated: return "truncation_violated";
    case ErrorCode::NoRecoveryIndex: return "no_recovery_index";
    case ErrorCode::Unexportable: return "unexportable";
    case ErrorCode::StepUnderflow: return "step_underflow";
    case ErrorCode::ProfileConflict: return "profile_conflict";
    case ErrorCode::Config: return "config";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace schromax
