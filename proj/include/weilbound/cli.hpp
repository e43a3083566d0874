#pragma once

#include <ostream>

namespace weilbound {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;

/// Artifact schema version; part of every cache key.
inline constexpr int kSchemaVersion = 1;

/// Full command-line driver. Artifacts go to `out` (or --out FILE),
/// diagnostics to `err`. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weilbound
