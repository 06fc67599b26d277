#pragma once

#include <stdexcept>
#include <string>

namespace ppq {

enum class ErrorCode {
  syntax,           // malformed document
  semantic,         // well-formed but violates a schema or graph invariant
  not_connected,    // schema graph is not connected
  invalid_argument, // bad query input (unknown node, repeated point, ...)
  invalid_path,     // step does not follow an edge or revisits a node
  empty_pool,
  compilation,      // compilation file does not match the schema or is corrupt
  io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ppq
