#pragma once

/// @file cli.hpp
/// The `mincodes` command-line front end. Exit status: 0 on success, 2 when
/// `check` finds the code (or codeword) not minimal, 1 on any error.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mincodes/code_core.hpp"

namespace mincodes::cli {

/// Environment variable overriding the default enumeration threshold.
inline constexpr const char* kThresholdEnv = "MINCODES_THRESHOLD";

enum class OutputFormat { Text, Json, Csv, Matrix };

struct CommandConfig {
  std::string subcommand;  ///< ring-info, perp, construct, check, bounds, search-mmin
  std::vector<Int> n;
  std::vector<std::size_t> k;
  std::size_t m_cap = 0;
  std::optional<std::string> recipe;
  std::optional<std::filesystem::path> input_path;
  std::optional<std::vector<Int>> vector;
  OutputFormat output_format = OutputFormat::Text;
  std::uint64_t threshold = kDefaultEnumerationThreshold;
  unsigned workers = 1;
  DecisionMethod method = DecisionMethod::Criterion;
  bool full_sweep = false;
  bool unit_constraint = true;
  bool root_words_only = false;
  std::size_t monotonicity = 0;
  bool timing = false;
};

/// Default threshold: $MINCODES_THRESHOLD if set to a positive integer, else
/// kDefaultEnumerationThreshold. Throws InvalidArgument on a malformed value.
std::uint64_t default_threshold();

/// Validates the subcommand-specific fields, runs the command and writes the
/// report to `out`. Errors go to `err` with exit status 1.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a CommandConfig and calls run().
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mincodes::cli
