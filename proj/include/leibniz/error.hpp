#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

enum class Errc {
  DimensionMismatch,
  NotNilpotent,
  NotAnIdeal,
  NotASubalgebra,
  NotLie,
  NotReducedCase,
  NoSolution,
  UnknownName,
  InvarianceFailed,
  NotDistinct,
  LeibnizViolation,
  Precondition,
  Parse,
};

std::string_view to_string(Errc code);

/// Exception carrying one of the library error codes. Every failure that the
/// callers are expected to handle is reported this way.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace leibniz
