#pragma once

#include <ostream>

namespace prf {

// Exit codes: 0 ok, 1 failed check or mismatch, 2 parse/usage error,
// 3 budget exceeded. JSON lines go to out, summaries and errors to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prf
