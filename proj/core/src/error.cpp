#include "speclimit/error.hpp"

namespace speclimit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NoBoundMotion: return "NoBoundMotion";
    case ErrorKind::RootNotBracketed: return "RootNotBracketed";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::ActionOutOfRange: return "ActionOutOfRange";
    case ErrorKind::DegeneratePeriod: return "DegeneratePeriod";
    case ErrorKind::ScanLimitExceeded: return "ScanLimitExceeded";
    case ErrorKind::InvalidCount: return "InvalidCount";
    case ErrorKind::InvalidSigma: return "InvalidSigma";
    case ErrorKind::DegenerateEnsemble: return "DegenerateEnsemble";
    case ErrorKind::InvalidProtocol: return "InvalidProtocol";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

}  // namespace speclimit
