#ifndef SNELLFAGNANO_ERROR_HPP
#define SNELLFAGNANO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sf {

enum class ErrorCode {
  InvalidArgument,
  DegenerateTriangle,
  TriangleInequalityViolated,
  DegenerateLine,
  IdealPoint,
  OnSideLine,
  FZero,
  NoSuchPoint,
  TildeDegenerate,
  ConcurrencyViolation,
  TotalInternalReflection,
  HitVertex,
  AssertionFailed,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sf

#endif  // SNELLFAGNANO_ERROR_HPP
