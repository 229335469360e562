#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclepack {

// Batch front end. `in` backs the "-" input path; results go to `out`,
// messages to `err`. Exit codes: 0 success or valid, 1 invalid input or
// failed check, 2 stuck, 64 usage errors, 66 unreadable or malformed files,
// 70 internal defects.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

// Same, for argument vectors built in code (no program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cyclepack
