#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace subdisc {

// Base of all validation failures. `kind()` is the stable machine-readable
// tag surfaced in CLI diagnostics; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string& m) : Error("EmptyInput", m) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error("DimensionMismatch", m) {}
};
struct NotHermitian : Error {
  explicit NotHermitian(const std::string& m) : Error("NotHermitian", m) {}
};
struct NonConvergence : Error {
  explicit NonConvergence(const std::string& m) : Error("NonConvergence", m) {}
};
struct ZeroSubspace : Error {
  explicit ZeroSubspace(const std::string& m) : Error("ZeroSubspace", m) {}
};
struct NotGeneralPosition : Error {
  explicit NotGeneralPosition(const std::string& m) : Error("NotGeneralPosition", m) {}
};
struct DegenerateSector : Error {
  explicit DegenerateSector(const std::string& m) : Error("DegenerateSector", m) {}
};
struct MissingFrames : Error {
  explicit MissingFrames(const std::string& m) : Error("MissingFrames", m) {}
};
struct InvalidPrior : Error {
  explicit InvalidPrior(const std::string& m) : Error("InvalidPrior", m) {}
};
struct InvalidWeights : Error {
  explicit InvalidWeights(const std::string& m) : Error("InvalidWeights", m) {}
};
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& m) : Error("InvalidArgument", m) {}
};
struct DegenerateAngles : Error {
  explicit DegenerateAngles(const std::string& m) : Error("DegenerateAngles", m) {}
};
struct UnnormalizedState : Error {
  explicit UnnormalizedState(const std::string& m) : Error("UnnormalizedState", m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};

}  // namespace subdisc
