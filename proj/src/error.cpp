#include "qcorr/error.hpp"

namespace qcorr {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotUnitTrace: return "NotUnitTrace";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::EmptyChannel: return "EmptyChannel";
    case Errc::Annihilated: return "Annihilated";
    case Errc::OptimizerBudgetExceeded: return "OptimizerBudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace qcorr
