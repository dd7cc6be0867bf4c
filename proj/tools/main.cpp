#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mhol/commands.hpp"

using namespace mhol;

namespace {

struct Common {
  RunOptions opt;
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "Emit the report as JSON");
  cmd->add_option("--seed", c.opt.seed, "Seed for every randomized check")->capture_default_str();
  cmd->add_option("--pairs", c.opt.pairs, "Random pairs for sampled verification")->capture_default_str();
  cmd->add_option("--budget", c.opt.budget, "Random samples for the stabilizer search")->capture_default_str();
  cmd->add_flag("--exhaustive-small", c.opt.exhaustive_small, "Also run the exhaustive (3,2) and (5,2) suites");
}

int emit(const CommandResult& r, bool json) {
  if (json) std::cout << r.report.dump(2) << "\n";
  else std::cout << r.text;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple holomorphs of class-two p-groups: orders, isomorphism witnesses and brute-force oracles"};
  app.require_subcommand(1);
  Common common;

  std::string spec_path;
  auto* analyze = app.add_subcommand("analyze", "Orders and stabilizer data for a group spec");
  analyze->add_option("spec", spec_path, "GroupSpec JSON file")->required();
  add_common(analyze, common);

  auto* verify = app.add_subcommand("verify", "Build and check an isomorphism G -> (G, o)");
  verify->add_option("spec", spec_path, "GroupSpec JSON file")->required();
  std::optional<std::int64_t> power_c;
  std::string form_literal;
  std::vector<std::string> criterion;
  auto* o_power = verify->add_option("--power-c", power_c, "theta_d for Delta = [x, y]^c");
  auto* o_form = verify->add_option("--form", form_literal, "Form literal, inline JSON or a file");
  auto* o_crit = verify->add_option("--criterion", criterion, "A.json T.json")->expected(2);
  o_power->excludes(o_form)->excludes(o_crit);
  o_form->excludes(o_crit);
  add_common(verify, common);

  auto* oracle = app.add_subcommand("oracle", "Permutation-level cross-check of the form/subgroup correspondence");
  oracle->add_option("spec", spec_path, "GroupSpec JSON file")->required();
  bool corrupt = false;
  oracle->add_flag("--corrupt", corrupt, "Inject a tampered form and witness as a negative control");
  add_common(oracle, common);

  auto* selftest = app.add_subcommand("selftest", "Property suites at pinned seeds");
  add_common(selftest, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*selftest) return emit(cmd_selftest(common.opt), common.json);
    const GroupSpec spec = load_spec(spec_path);
    if (*analyze) return emit(cmd_analyze(spec, common.opt), common.json);
    if (*oracle) return emit(cmd_oracle(spec, common.opt, corrupt), common.json);
    if (power_c) return emit(cmd_verify_power(spec, *power_c, common.opt), common.json);
    if (!form_literal.empty())
      return emit(cmd_verify_form(spec, parse_form(read_json_arg(form_literal), spec), common.opt), common.json);
    if (criterion.size() == 2) {
      const FpMatrix a = load_matrix(criterion[0], spec.field());
      const FpMatrix t = load_matrix(criterion[1], spec.field());
      return emit(cmd_verify_criterion(spec, a, t, common.opt), common.json);
    }
    std::cerr << "verify: give one of --power-c, --form or --criterion\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
