#pragma once

#include <stdexcept>
#include <string>

namespace kaut {

/// Domain error raised by library operations. `code()` is a stable
/// machine-readable identifier (e.g. "NotPrime", "NotNilpotent").
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* kNotPrime = "NotPrime";
inline constexpr const char* kPrimeTooLarge = "PrimeTooLarge";
inline constexpr const char* kReducibleModulus = "ReducibleModulus";
inline constexpr const char* kFieldMismatch = "FieldMismatch";
inline constexpr const char* kDivisionByZero = "DivisionByZero";
inline constexpr const char* kDivisionByZeroPoly = "DivisionByZeroPoly";
inline constexpr const char* kZeroPolynomial = "ZeroPolynomial";
inline constexpr const char* kDegreeCapExceeded = "DegreeCapExceeded";
inline constexpr const char* kInfiniteField = "InfiniteField";
inline constexpr const char* kUnsupportedField = "UnsupportedField";
inline constexpr const char* kShapeMismatch = "ShapeMismatch";
inline constexpr const char* kNotNilpotent = "NotNilpotent";
inline constexpr const char* kNotAutomorphism = "NotAutomorphism";
inline constexpr const char* kNotLinearIdeal = "NotLinearIdeal";
inline constexpr const char* kNotPrimary = "NotPrimary";
inline constexpr const char* kInseparable = "Inseparable";
inline constexpr const char* kNegativeCoefficient = "NegativeCoefficient";
inline constexpr const char* kNotEpimorphism = "NotEpimorphism";
inline constexpr const char* kNotInFPrime = "NotInFPrime";
inline constexpr const char* kInvalidArgument = "InvalidArgument";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace kaut
