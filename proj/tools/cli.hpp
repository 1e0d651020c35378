#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobrr/verify.hpp"

namespace frobrr::cli {

enum class Command {
  coeffs,
  verify_main,
  verify_grading,
  verify_deligne,
  verify_mumford,
  verify_remark,
  verify_arr,
  verify_cube,
  frobenius,
  sweep,
};

enum class OutputFormat { text, json };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::sweep;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> t;
  std::int64_t p_max = 13;
  bool assume_mumford = false;
  bool sequential = false;
  bool timing = true;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> out_path;
};

/// Either a validated configuration or an exit code (help: 0, usage error: 2).
using ParseOutcome = std::variant<RunConfig, int>;

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out,
                        std::ostream& err);

/// Checks the per-command required parameters; returns an error message or
/// nullopt.
std::optional<std::string> validate(const RunConfig& config);

/// Runs the configured command. Exit 0 iff every check passed, 1 if any
/// failed, 2 on validation errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: parse, validate, run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON document for a command's reports; stable for identical inputs when
/// timing is disabled.
std::string render_json(const RunConfig& config, const verify::Reports& reports);
std::string render_text(const verify::Reports& reports);

std::string command_name(Command c);

}  // namespace frobrr::cli
