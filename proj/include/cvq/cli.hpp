#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cvq::cli {

// Runs one command line. Returns 0 on success, 2 on argument or domain
// errors, 1 on runtime failures. Data goes to `out` unless --out is given.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Same, with the program name prepended.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cvq::cli
