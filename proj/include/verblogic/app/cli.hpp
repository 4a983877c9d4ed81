#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace verblogic::app {

// Entry point for the `verblogic` executable. `args` includes the program
// name. Returns 0 on success, 1 on diagnostics or runtime errors and 2 on
// usage errors. `transcript` makes the REPL echo commands it reads.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, bool transcript = true);

}  // namespace verblogic::app
