#pragma once

#include <iosfwd>

namespace tiltlab {

/// Runs the command line. Returns 0 on success, 1 on usage errors (bad flags,
/// malformed numbers), 2 when an input violates a mathematical precondition,
/// 3 on unexpected internal failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tiltlab
