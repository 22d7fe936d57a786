#pragma once

#include <iosfwd>

namespace ctc {

// Exit codes: 0 success, 1 verify failure or no applicable algorithm,
// 2 usage, schema or validation errors. Data goes to `out`, diagnostics
// to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ctc
