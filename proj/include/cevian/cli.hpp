#pragma once

// Command implementations behind the `cevian` executable. Each returns the
// process exit code: 0 success, 1 a theorem check failed, 2 bad input or a
// violated input guard.

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cevian {

/// Largest accepted --count for fuzz.
inline constexpr std::uint64_t kMaxFuzzCount = 100000;

int construct_command(const std::string& input, const std::string& output, const std::string& svg, std::ostream& out,
                      std::ostream& err);
int check_command(const std::string& input, const std::string& theorems, std::uint64_t seed, const std::string& output,
                  std::ostream& out, std::ostream& err);
int fuzz_command(std::uint64_t seed, std::uint64_t count, const std::string& theorems, std::int64_t bound,
                 const std::string& output, std::ostream& out, std::ostream& err);

/// Parses flags and dispatches to a command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cevian
