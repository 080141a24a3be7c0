#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

namespace mpc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. args excludes the program name. Results go to out
// (or to --out files), diagnostics to err. Returns 0 on success, 1 on a
// domain error or a failed check, 2 on a usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// Resolves a fixture reference: an existing path is used as is; otherwise
// the file name is looked up in $MPC_FIXTURE_DIR, then in the built-in data
// directory. "A003313" style names map to "b003313.txt".
std::filesystem::path resolve_fixture(const std::string& reference);

}  // namespace mpc::cli
