#pragma once

#include <ostream>

namespace ntnsim {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;  // bad flags, unreadable or invalid configuration
inline constexpr int kExitRuntimeError = 2;  // simulation/IO failure, failed selftest

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ntnsim
