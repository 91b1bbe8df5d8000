#pragma once

namespace mcgcert {

// Exit codes: 0 all requested checks pass, 1 a check failed, 2 bad usage.
int run_cli(int argc, const char* const* argv);

}  // namespace mcgcert
