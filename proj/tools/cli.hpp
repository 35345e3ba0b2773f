#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "rdbnorm/normalizer.hpp"

namespace rdbnorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Entry point shared by main() and the tests. `args` excludes the program
/// name. Results go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Reads a schema from a file path, or from the bundled corpus when the
/// argument has the form "corpus:<name>".
RawSchema load_schema(const std::string& source);

}  // namespace rdbnorm::cli
