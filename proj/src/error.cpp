#include "tgc/error.hpp"

namespace tgc {

std::string_view errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::SamplingFailure: return "SamplingFailure";
    case ErrorKind::ZeroCurve: return "ZeroCurve";
    case ErrorKind::ChartDegenerate: return "ChartDegenerate";
    case ErrorKind::PolarLocusCurve: return "PolarLocusCurve";
    case ErrorKind::ZeroPullback: return "ZeroPullback";
    case ErrorKind::NearSingularRadius: return "NearSingularRadius";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::MissingGrowthIndex: return "MissingGrowthIndex";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::CurvesIdentical: return "CurvesIdentical";
    case ErrorKind::SharingViolated: return "SharingViolated";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace tgc
