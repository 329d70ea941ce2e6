#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sppq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Schema version reported in every JSON object.
inline constexpr int kSchemaVersion = 1;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sppq::cli
