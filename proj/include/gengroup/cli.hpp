#pragma once

// The gengroup command line: check, construct, homs, census, gstar.
//
// Exit status: 0 when every axiom line passes (or the --expect floor is
// met), 1 on an axiom failure, a constructor precondition failure or an
// exceeded enumeration guard, 2 on unreadable input or bad usage.

#include <ostream>
#include <string>
#include <vector>

namespace gengroup {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gengroup
