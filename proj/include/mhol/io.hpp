#pragma once

/**
 * @file io.hpp
 * @brief JSON input formats and report types shared by the CLI and tests.
 *
 * Parse errors are raised as Error(InvalidInput) whose message starts with
 * the offending field, e.g. "D[1][0]: expected an integer".
 */

#include <optional>
#include <string>

#include <gmpxx.h>

#include "json.hpp"
#include "mhol/bilinear.hpp"
#include "mhol/class2_group.hpp"
#include "mhol/error.hpp"
#include "mhol/fp_matrix.hpp"

namespace mhol {

using Json = nlohmann::json;

/// Exit code for an error kind: 1 property failure, 2 input, 3 precondition, 4 bound.
int exit_code_for(ErrorKind kind);

/// {"p": int, "n": int, "D": [[int; m]; n]}.
GroupSpec parse_spec(const Json& doc);
GroupSpec load_spec(const std::string& path);
Json spec_to_json(const GroupSpec& spec);

/// A JSON array of rows. `field` names the input in error messages.
FpMatrix parse_matrix(const Json& doc, const PrimeField& field, const std::string& name);
FpMatrix load_matrix(const std::string& path, const PrimeField& field);
Json matrix_to_json(const FpMatrix& m);

/// {"kind":"power","c":int} | {"kind":"sigma","S":[[int]]} | {"kind":"tensor","T":[[[int]]]}.
BilinearForm parse_form(const Json& doc, const GroupSpec& spec);
/// Accepts either inline JSON text or a path to a file holding it.
Json read_json_arg(const std::string& text_or_path);

enum class StabilizerStatus { Trivial, Nontrivial, Unknown };
std::string to_string(StabilizerStatus s);

struct AnalysisReport {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  FpMatrix d;
  std::string pair_order;
  std::size_t rank_d = 0;
  bool omega1_in_derived = false;
  mpz_class sym_part_order;
  std::optional<mpz_class> res_group_order;  ///< empty when rank D < n
  std::optional<mpz_class> tg_order;
  bool tg_unconditional = false;
  StabilizerStatus stabilizer = StabilizerStatus::Unknown;
  std::size_t stabilizer_found = 0;
  std::uint64_t stabilizer_scanned = 0;
  bool stabilizer_exhaustive = false;
  double seconds = 0;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

Json to_json(const AnalysisReport& r);
/// Throws InvalidInput on a malformed report.
AnalysisReport analysis_from_json(const Json& doc);
std::string to_text(const AnalysisReport& r);

}  // namespace mhol
