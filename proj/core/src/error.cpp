#include "mfunc/error.hpp"

namespace mfunc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Method: return "method";
    case ErrorKind::Geometry: return "geometry";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::Coverage: return "coverage";
    case ErrorKind::Range: return "range";
    case ErrorKind::Data: return "data";
    case ErrorKind::Config: return "config";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + message), kind_(kind) {}

}  // namespace mfunc
