#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kohnert {

enum class ErrorCode {
  InvalidCoordinate,
  BoundExceeded,
  NotColumnCompatible,
  NotNortheast,
  CellNotFound,
  NegativeDisplacement,
  IllegalMove,
  AlreadyInitial,
  NotElementary,
  InvalidChain,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported as a KohnertError
/// carrying one of the codes above. Broken internal invariants (say, a
/// witness that fails its own clauses) throw std::logic_error instead.
class KohnertError : public std::runtime_error {
 public:
  KohnertError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kohnert
