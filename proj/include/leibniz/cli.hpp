#pragma once

// Command layer behind the leibniz-cli executable. Each command returns a
// report with a stable key order and an exit code:
//   0 success, 1 mathematical failure, 2 usage or parse error.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/io.hpp"

namespace leibniz::cli {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kUsageError = 2 };

struct Options {
  std::uint64_t seed = 0;
  bool text = false;
  bool timing = false;  // adds elapsed_ms, which makes output run-dependent
};

struct CommandResult {
  int exit_code = kOk;
  Json report;
};

CommandResult validate(const std::filesystem::path& file, const Options& opts);
CommandResult analyze(const std::filesystem::path& file, const Options& opts);
CommandResult levi(const std::filesystem::path& file, const Options& opts);
CommandResult example(const std::string& name, const std::vector<std::string>& lambdas,
                      const std::optional<std::filesystem::path>& out_dir, const Options& opts);
CommandResult conjugacy(const std::filesystem::path& file, const std::filesystem::path& complement_a,
                        const std::filesystem::path& complement_b, const Options& opts);

std::string render_text(const Json& report);

/// Parses arguments, runs the command and writes the report to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leibniz::cli
