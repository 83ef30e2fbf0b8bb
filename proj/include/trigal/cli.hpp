#pragma once

#include <iosfwd>

namespace trigal::cli {

/// Runs one command line and writes a single key-sorted JSON document to
/// `out`. Returns 0 when every requested check passes, 1 when a check fails
/// or a computation raises an error, 2 on usage errors (reported on `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace trigal::cli
