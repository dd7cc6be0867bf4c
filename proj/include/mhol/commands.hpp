#pragma once

/**
 * @file commands.hpp
 * @brief The analyses behind the CLI subcommands, returning JSON reports.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "mhol/io.hpp"
#include "mhol/tg_structure.hpp"

namespace mhol {

struct RunOptions {
  std::uint64_t seed = 20240611;
  std::uint64_t pairs = 10'000;
  std::uint64_t budget = 20'000;
  bool exhaustive_small = false;
};

struct CommandResult {
  Json report;
  std::string text;
  int exit_code = 0;
};

/// Orders, rank data and a stabilizer search with `budget` samples when
/// GL_n is too large to scan.
AnalysisReport analyze(const GroupSpec& spec, const RunOptions& opt);
CommandResult cmd_analyze(const GroupSpec& spec, const RunOptions& opt);

CommandResult cmd_verify_power(const GroupSpec& spec, std::int64_t c, const RunOptions& opt);
/// Symmetric part by sym_isomorphism, anti-symmetric part through a
/// criterion solution found by scanning GL_n.
CommandResult cmd_verify_form(const GroupSpec& spec, const BilinearForm& form, const RunOptions& opt);
CommandResult cmd_verify_criterion(const GroupSpec& spec, const FpMatrix& a, const FpMatrix& t, const RunOptions& opt);

/// Correspondence cross-check plus conjugation checks. With `corrupt`, a
/// tampered form table and a tampered witness are fed through the same
/// checks and the first failing property is reported.
CommandResult cmd_oracle(const GroupSpec& spec, const RunOptions& opt, bool corrupt);

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};
std::vector<SuiteResult> run_selftest(const RunOptions& opt);
CommandResult cmd_selftest(const RunOptions& opt);

}  // namespace mhol
