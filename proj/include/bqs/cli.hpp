#pragma once

#include <ostream>

namespace bqs {

// Runs one command line.  Returns 0 on success, 1 on a domain error (message
// on err), 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bqs
