#pragma once

#include <ostream>

namespace polydual {

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the cache directory when --cache-dir is absent.
inline constexpr const char* kCacheDirEnv = "POLYDUAL_CACHE_DIR";

/// Parses argv and runs one subcommand. Reports go to `out` (or --out);
/// domain errors are written to `err` as JSON.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polydual
