#pragma once

#include <iosfwd>

namespace hardylab {

/// Command-line entry point. Exit codes: 0 success, 1 tolerance failure, 2 usage error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hardylab
