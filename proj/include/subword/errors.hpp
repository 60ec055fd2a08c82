#pragma once

#include <stdexcept>
#include <string>

namespace subword {

/// Bad arguments or unusable input.  The CLI maps this category to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A claimed identity failed on concrete data.  The CLI maps this to exit
/// code 1.  These are never downgraded or suppressed; the message carries the
/// falsifying instance.
class PropertyViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct InvalidGenerator final : InputError {
  explicit InvalidGenerator(int s)
      : InputError("generator index out of range: s" + std::to_string(s)) {}
};

struct NotContained final : InputError {
  NotContained() : InputError("word does not contain the target element") {}
};

struct DegeneratePi final : InputError {
  DegeneratePi()
      : InputError("target element must not be the identity (the complex "
                    "would be the full simplex)") {}
};

struct NotReduced final : InputError {
  NotReduced() : InputError("word is not reduced") {}
};

struct IndexOutOfRange final : InputError {
  explicit IndexOutOfRange(int i)
      : InputError("position index out of range: " + std::to_string(i)) {}
};

struct WordTooLarge final : InputError {
  WordTooLarge(int n, int limit)
      : InputError("word of size " + std::to_string(n) +
                    " exceeds the census limit " + std::to_string(limit)) {}
};

struct TooManyVertices final : InputError {
  TooManyVertices(int n, int limit)
      : InputError("vertex count " + std::to_string(n) + " exceeds limit " +
                    std::to_string(limit)) {}
};

struct TooLarge final : InputError {
  explicit TooLarge(const std::string& what_failed)
      : InputError("input too large for exact enumeration: " + what_failed) {}
};

struct NotAPermutation final : InputError {
  NotAPermutation()
      : InputError("order is not a permutation of the facet/generator list") {}
};

struct NotPure final : InputError {
  NotPure() : InputError("complex is not pure") {}
};

struct ZeroIdeal final : InputError {
  ZeroIdeal() : InputError("operation undefined for the zero ideal") {}
};

struct UnitIdeal final : InputError {
  UnitIdeal() : InputError("operation undefined for the unit ideal") {}
};

struct MixedDegrees final : InputError {
  MixedDegrees()
      : InputError("generators are not all of the same degree") {}
};

struct NotSpecial final : InputError {
  NotSpecial()
      : InputError("instance is not in the special class (needs r <= "
                    "n-length+1 and d_r = r-1)") {}
};

struct ParseError final : InputError {
  explicit ParseError(const std::string& msg) : InputError("parse error: " + msg) {}
};

struct FactorizationMismatch final : PropertyViolation {
  explicit FactorizationMismatch(const std::string& detail)
      : PropertyViolation("common-factor factorization failed: " + detail) {}
};

struct CIGeneratorMismatch final : PropertyViolation {
  explicit CIGeneratorMismatch(const std::string& detail)
      : PropertyViolation("complete-intersection generators disagree with "
                          "minimal non-faces: " + detail) {}
};

}  // namespace subword
