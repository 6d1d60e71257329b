#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thickrep {

enum class Errc {
  FieldMismatch,
  DivisionByZero,
  NotMonic,
  WrongField,
  ZeroInput,
  DimensionMismatch,
  NotSquare,
  BadM,
  BadN,
  AmbientMismatch,
  DegreeOverflow,
  CapExceeded,
  PreconditionFailed,
  FieldTooSmall,
  BadFamily,
  CodimTooLarge,
  CodimMismatch,
  NonIntegralMultiplicity,
  ScaleExceeded,
  Singular,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace thickrep
