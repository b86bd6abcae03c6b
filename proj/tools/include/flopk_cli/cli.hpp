#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace flopk::cli {

enum class Format { Json, Table };

/// Exit codes: success or true verdict, computed false verdict, bad usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitUsage = 2;

struct CommandConfig {
  std::string subcommand;
  int t = 1;
  int h = 2;
  int i = 0;
  int k = 0;
  int p = 0;
  std::string partition;
  std::string weight;
  std::string vector;
  std::string point;
  std::string expression;
  std::string matrix;      // inline matrix JSON for snf
  std::string permutation;
  std::optional<std::uint64_t> field;  // prime order for gamma/quadric
  bool line_basis = true;
  Format format = Format::Json;
  std::uint64_t seed = 20240601;
};

/// Dispatches one subcommand, writing the report to out and diagnostics to
/// err. Returns the process exit code.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a config, or returns the exit code when parsing ends
/// the run (help, usage error).
std::variant<CommandConfig, int> parse_arguments(int argc, const char* const* argv,
                                                 std::ostream& out, std::ostream& err);

/// parse_arguments followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flopk::cli
