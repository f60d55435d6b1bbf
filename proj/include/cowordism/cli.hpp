#pragma once

namespace cow {

// Entry point of the command-line tool; argv[0] is the program name.
// Exit codes: 0 success (including a positive membership test), 1 negative
// membership test, 2 usage, parse or validation errors.
int run_cli(int argc, const char* const* argv);

}  // namespace cow
