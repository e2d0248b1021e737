#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ams::cli {

inline constexpr int kExitModel = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitError = 1;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ams::cli
