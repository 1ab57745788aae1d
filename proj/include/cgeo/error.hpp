#pragma once

#include <stdexcept>
#include <string>

namespace cgeo {

enum class ErrorCode {
  kArgument = 1,
  kDomain,
  kUnsupportedDimension,
  kDegenerateVelocity,
  kConstraintDrift,
  kPole,
  kOutOfRange,
  kConfig,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code carries the category so the
/// C API and CLI can map failures without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cgeo
