#pragma once

#include <ostream>

namespace selfconf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the command-line tool. Structured output goes to `out`
/// as JSON, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace selfconf::cli
