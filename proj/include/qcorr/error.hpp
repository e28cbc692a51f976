#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

enum class Errc {
  NotHermitian,
  NotUnitTrace,
  NotPositive,
  NoConvergence,
  ShapeMismatch,
  UnknownName,
  ParamOutOfRange,
  EmptyChannel,
  Annihilated,
  OptimizerBudgetExceeded,
  ParseError,
  InternalConsistency,
};

const char* to_string(Errc code);

/// Exception carrying a machine-readable code. For NotPositive the offending
/// (most negative) eigenvalue is kept in value().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, double value = 0.0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), value_(value) {}

  Errc code() const noexcept { return code_; }
  double value() const noexcept { return value_; }

 private:
  Errc code_;
  double value_;
};

}  // namespace qcorr
