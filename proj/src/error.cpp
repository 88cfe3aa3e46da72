#include "kohnert/error.hpp"

namespace kohnert {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidCoordinate: return "InvalidCoordinate";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotColumnCompatible: return "NotColumnCompatible";
    case ErrorCode::NotNortheast: return "NotNortheast";
    case ErrorCode::CellNotFound: return "CellNotFound";
    case ErrorCode::NegativeDisplacement: return "NegativeDisplacement";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::AlreadyInitial: return "AlreadyInitial";
    case ErrorCode::NotElementary: return "NotElementary";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace kohnert
