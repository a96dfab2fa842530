#include "ncpoisson/error.hpp"

namespace ncpoisson {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotInner: return "NotInner";
    case ErrorCode::CenterNotKilled: return "CenterNotKilled";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::ClassificationMismatch: return "ClassificationMismatch";
    case ErrorCode::NotModuleMap: return "NotModuleMap";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

}  // namespace ncpoisson
