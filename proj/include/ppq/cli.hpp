#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppq::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,       // unreadable input, unwritable output
  kSchemaError = 2,   // malformed, invalid or disconnected schema; bad compilation file
  kQueryError = 3,    // unknown points, repeated points, bad c_weight
};

inline constexpr const char* kCWeightEnv = "PPQ_C_WEIGHT";

/// Runs the `ppq` command line. `args[0]` is the program name.
///
///   ppq compile SCHEMA [-o OUT]
///   ppq query SCHEMA POINT POINT... [--more N] [--c-weight X] [--compiled FILE]
///   ppq serve SCHEMA [--port P] [--host H] [--compiled FILE] [--c-weight X]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppq::cli
