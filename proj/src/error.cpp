#include "ppq/error.hpp"

namespace ppq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::syntax: return "syntax error";
    case ErrorCode::semantic: return "semantic error";
    case ErrorCode::not_connected: return "not connected";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::invalid_path: return "invalid path";
    case ErrorCode::empty_pool: return "empty pool";
    case ErrorCode::compilation: return "compilation error";
    case ErrorCode::io: return "i/o error";
  }
  return "error";
}

}  // namespace ppq
