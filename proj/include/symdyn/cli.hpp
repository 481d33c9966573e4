#pragma once

#include <ostream>

namespace symdyn {

/// Runs one CLI invocation. Results go to `out` as JSON; usage errors and
/// library errors go to `err` as JSON objects {"error": kind, "message": ...}.
/// Returns 0 on success or pass, 1 on a failed check or library error, 2 on a
/// usage error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symdyn
