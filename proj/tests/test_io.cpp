#include "doctest.h"
#include "support.hpp"

#include "mhol/commands.hpp"
#include "mhol/io.hpp"

using namespace mhol;
using namespace testsupport;

namespace {

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("spec parsing names the offending field") {
  const GroupSpec s = parse_spec(Json::parse(R"({"p": 3, "n": 3, "D": [[1,0,0],[0,1,0],[0,0,1]]})"));
  CHECK(s.n() == 3);
  CHECK(s.d() == FpMatrix::identity(PrimeField(3), 3));
  CHECK(parse_spec(spec_to_json(s)) == s);

  CHECK(error_of([] { parse_spec(Json::parse(R"({"n": 2, "D": [[0],[0]]})")); }) == "InvalidInput: p: missing");
  CHECK(error_of([] { parse_spec(Json::parse(R"({"p": 9, "n": 2, "D": [[0],[0]]})")); }).find("p: ") !=
        std::string::npos);
  CHECK(error_of([] { parse_spec(Json::parse(R"({"p": 3, "n": 1, "D": [[]]})")); }).find("n: ") != std::string::npos);
  CHECK(error_of([] { parse_spec(Json::parse(R"({"p": 3, "n": 2, "D": [[0]]})")); }).find("D: expected 2 rows") !=
        std::string::npos);
  CHECK(error_of([] { parse_spec(Json::parse(R"({"p": 3, "n": 2, "D": [[0],[0, 1]]})")); }).find("D[1]: ") !=
        std::string::npos);
  CHECK(error_of([] { parse_spec(Json::parse(R"({"p": 3, "n": 2, "D": [[0],[true]]})")); }).find("D[1][0]") !=
        std::string::npos);
  CHECK(error_of([] { parse_spec(Json::parse("[1, 2]")); }).find("document") != std::string::npos);
  // Entries are reduced mod p.
  CHECK(parse_spec(Json::parse(R"({"p": 5, "n": 2, "D": [[7],[-1]]})")).d() == mat(5, {{2}, {4}}));
}

TEST_CASE("form literals") {
  const GroupSpec s = spec_zero(5, 3);
  CHECK(parse_form(Json::parse(R"({"kind":"power","c":2})"), s) == power_form(s, 2));
  const FpMatrix sigma = mat(5, {{1, 0, 2}, {0, 0, 0}, {4, 1, 0}});
  CHECK(parse_form(Json::parse(R"({"kind":"sigma","S":[[1,0,2],[0,0,0],[4,1,0]]})"), s) ==
        sigma_form(SigmaEndo::from_sigma(s, sigma)));
  const GroupSpec s2 = spec_zero(3, 2);
  BilinearForm t = parse_form(Json::parse(R"({"kind":"tensor","T":[[[1],[2]],[[0],[4]]]})"), s2);
  CHECK(t.at(0, 1) == FpVec{2});
  CHECK(t.at(1, 1) == FpVec{1});
  CHECK(error_of([&] { parse_form(Json::parse(R"({"kind":"cubic"})"), s2); }).find("kind: ") != std::string::npos);
  CHECK(error_of([&] { parse_form(Json::parse(R"({"kind":"sigma","S":[[1,2]]})"), s2); }).find("S: ") !=
        std::string::npos);
  CHECK(error_of([&] { parse_form(Json::parse(R"({"kind":"tensor","T":[[[1],[2]],[[0]]]})"), s2); }).find("T[1]") !=
        std::string::npos);
  CHECK(error_of([] { read_json_arg("{not json"); }).find("malformed JSON") != std::string::npos);
}

TEST_CASE("exit codes by error kind") {
  CHECK(exit_code_for(ErrorKind::InvalidInput) == 2);
  CHECK(exit_code_for(ErrorKind::DimensionMismatch) == 2);
  CHECK(exit_code_for(ErrorKind::HalfExcluded) == 3);
  CHECK(exit_code_for(ErrorKind::CriterionFails) == 3);
  CHECK(exit_code_for(ErrorKind::BoundExceeded) == 4);
  CHECK(exit_code_for(ErrorKind::VerificationFailed) == 1);
}

TEST_CASE("analysis reports round-trip through JSON") {
  RunOptions opt;
  for (const auto& s : {spec_zero(3, 2), spec_with(3, 2, {{1}, {0}}), spec_with(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                        spec_with(3, 4, {{1, 0, 0, 0, 0, 2}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 0}})}) {
    const AnalysisReport r = analyze(s, opt);
    const Json j = to_json(r);
    CHECK(analysis_from_json(Json::parse(j.dump())) == r);
    CHECK(j["pair_order"] == s.pair_order());
    CHECK(j["sym_part_order"].is_string());
  }
  const AnalysisReport n2 = analyze(spec_zero(3, 2), opt);
  CHECK_FALSE(n2.res_group_order);
  CHECK(n2.sym_part_order == 27);
  CHECK(to_json(n2)["res_group_order"] == "NotFullRank");
  CHECK(n2.stabilizer == StabilizerStatus::Nontrivial);

  Json broken = to_json(n2);
  broken["stabilizer"]["status"] = "maybe";
  CHECK_THROWS_AS(analysis_from_json(broken), Error);
  broken = to_json(n2);
  broken["sym_part_order"] = 27;
  CHECK_THROWS_AS(analysis_from_json(broken), Error);
}

TEST_CASE("analyze tags the order as conditional unless the stabilizer is certified trivial") {
  RunOptions opt;
  const GroupSpec s = spec_with(3, 4, {{1, 0, 0, 0, 0, 2}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 0}});
  const AnalysisReport r = analyze(s, opt);
  CHECK(r.tg_order);
  CHECK_FALSE(r.stabilizer_exhaustive);
  CHECK_FALSE(r.tg_unconditional);
  // At n = 3 GL_3(F_3) is scanned completely.
  const AnalysisReport r3 = analyze(spec_with(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), opt);
  CHECK(r3.stabilizer_exhaustive);
  CHECK(r3.tg_unconditional == (r3.stabilizer == StabilizerStatus::Trivial));
}

TEST_CASE("verify commands") {
  RunOptions opt;
  const GroupSpec s = spec_zero(3, 2);
  CommandResult id = cmd_verify_power(s, 0, opt);
  CHECK(id.exit_code == 0);
  CHECK(id.report["verified"] == true);
  CHECK(id.report["d"] == 1);
  CHECK_THROWS_WITH_AS(cmd_verify_power(s, 1, opt), doctest::Contains("HalfExcluded"), Error);

  const GroupSpec s5 = spec_with(5, 2, {{1}, {2}});
  BilinearForm f(s5, {{1}, {3}, {0}, {2}});
  CommandResult comp = cmd_verify_form(s5, f, opt);
  CHECK(comp.exit_code == 0);
  CHECK(comp.report["form_matches_input"] == true);
  // sigma = 1 at p = 3 makes T = 3 = 0.
  CHECK_THROWS_WITH_AS(cmd_verify_form(s, sigma_form(SigmaEndo::from_sigma(s, mat(3, {{1}}))), opt),
                       doctest::Contains("CriterionFails"), Error);

  const GroupSpec s4 = spec_with(3, 4, {{1, 0, 0, 0, 0, 2}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 0}});
  std::mt19937_64 rng(3);
  const ResGroup res(s4);
  const CriterionSolution sol = res.to_solution(res.random(rng));
  CommandResult crit = cmd_verify_criterion(s4, sol.a, sol.t, opt);
  CHECK(crit.exit_code == 0);
  CHECK(crit.report["res_beta_equals_wedgeA_T"] == true);
  CHECK(crit.report["exhaustive"] == false);
  CHECK(crit.report["pairs_checked"] == 10'000);
  CHECK_THROWS_WITH_AS(cmd_verify_criterion(s4, sol.a, FpMatrix::identity(s4.field(), 6), opt),
                       doctest::Contains("CriterionFails"), Error);
  CHECK_THROWS_WITH_AS(cmd_verify_criterion(s4, sol.t, sol.t, opt), doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("oracle command") {
  RunOptions opt;
  CommandResult ok = cmd_oracle(spec_zero(3, 2), opt, false);
  CHECK(ok.exit_code == 0);
  CHECK(ok.report["correspondence"]["bijection"] == true);
  CommandResult bad = cmd_oracle(spec_zero(3, 2), opt, true);
  CHECK(bad.exit_code == 1);
  CHECK_FALSE(bad.report["corrupted"]["failed_properties"].empty());
  CHECK(bad.report["corrupted"]["swapped_witness_passes_conjugation"] == false);
  CHECK_THROWS_WITH_AS(cmd_oracle(spec_zero(3, 4), opt, false), doctest::Contains("BoundExceeded"), Error);
}

TEST_CASE("selftest is deterministic for a fixed seed") {
  RunOptions opt;
  opt.seed = 42;
  opt.pairs = 500;
  const CommandResult a = cmd_selftest(opt), b = cmd_selftest(opt);
  CHECK(a.exit_code == 0);
  CHECK(a.report == b.report);
  CHECK(a.report["suites"].size() == 4);
}
