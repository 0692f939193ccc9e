#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "w0sig/algebra.hpp"

namespace w0sig::cli {

enum class Command { Signature, Predict, Dimension, Character, IdealBasis, HilbertBasis, Tables, Verify };

enum ExitCode : int { kOk = 0, kUsage = 1, kDisagreement = 2, kInternal = 3 };

struct Options {
  bool json = false;
  bool eps = false;
  bool check = false;
  std::optional<std::int64_t> max_sum;
  std::optional<std::int64_t> max_dim;
  std::optional<std::string> out;
};

struct CommandRequest {
  Command command = Command::Signature;
  AlgebraId algebra;
  /// Dynkin coefficients in the numbering of `algebra` (aliases resolved).
  std::optional<IntVector> weight;
  Options options;
  std::vector<std::string> warnings;
};

/// Thrown by parse_request for -h/--help; what() is the help text.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses argv-style arguments (without the program name). Throws
/// InvalidInput on any usage problem.
CommandRequest parse_request(const std::vector<std::string>& args);

/// Executes a request, writing the report to `out` (or to the --out file).
/// Returns the process exit code.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// Full front end: parse, run, and map exceptions to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace w0sig::cli
