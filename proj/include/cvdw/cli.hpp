#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cvdw::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class OutputFormat { json, csv, text };

struct RunConfig {
    std::int64_t max_exact_N = 40;
    std::uint64_t node_budget = 100'000'000;
    std::int64_t time_budget_seconds = 60;
    std::optional<std::filesystem::path> cache_path;
    std::optional<OutputFormat> output_format;
};

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFound = 1;  // verify-file: some set contains a progression
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line (args excludes the program name) and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Inclusive "a..b" range, or a bare integer for a singleton.
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

}  // namespace cvdw::cli
