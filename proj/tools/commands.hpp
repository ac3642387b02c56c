#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sllt::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { Ok = 0, PropertyViolation = 1, ParseError = 2, PreconditionError = 3 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sllt::cli
