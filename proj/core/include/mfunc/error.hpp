#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfunc {

/// Failure categories shared by every module. The CLI maps them onto exit codes.
enum class ErrorKind {
  Domain,        // argument outside the mathematical domain (σ ≤ 0, q not prime, ...)
  Precondition,  // documented precondition not met (p ∉ P_f(ε), |P| too small, ...)
  Method,        // requested method cannot work for these inputs
  Geometry,      // grids do not line up
  Precision,     // requested accuracy not reached
  Coverage,      // grid or table too small for the data it must hold
  Range,         // integer width exceeded
  Data,          // malformed or missing input data
  Config,        // invalid experiment configuration
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) throw Error(kind, message);
}

}  // namespace mfunc
