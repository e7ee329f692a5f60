#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmcflat::cli {

// Exit statuses. Nothing else is ever returned.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Regular output goes to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Writes through a temporary file in the same directory and renames it over
// the target.
void write_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace cmcflat::cli
