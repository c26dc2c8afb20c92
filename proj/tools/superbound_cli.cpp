// superbound: verify and evaluate entanglement bounds for superpositions.
//
//   superbound verify --config cfg.json --trials 10000 --variant constrained --out run.jsonl [--csv]
//   superbound eval spec.json --variant unconstrained
//   superbound coeffs 5
//
// Exit codes: 0 pass, 1 inequality or check violation, 2 input error,
// 3 precondition error.

#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "superbound/assistant.hpp"
#include "superbound/biorthogonal.hpp"
#include "superbound/bounds.hpp"
#include "superbound/campaign.hpp"
#include "superbound/errors.hpp"
#include "superbound/serialization.hpp"

namespace {

using namespace superbound;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

struct VerifyArgs {
  std::string config_path;
  std::uint64_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string variant = "constrained";
  std::string out_path;
  bool csv = false;
  bool timing = false;
  bool no_spec = false;
  unsigned threads = 0;
};

struct EvalArgs {
  std::string spec_path;
  std::string variant = "unconstrained";
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

int cmd_verify(const VerifyArgs& args) {
  EnsembleConfig config;
  CampaignVariant variant{};
  try {
    config = config_from_json(read_json_file(args.config_path));
    if (args.seed) config.seed = *args.seed;
    variant = campaign_variant_from_string(args.variant);
    if (args.trials < 1) throw SchemaError("--trials must be at least 1");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  CampaignResult result;
  try {
    result = run_campaign(config, args.trials, variant,
                          CampaignOptions{args.threads, !args.no_spec});
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const DomainError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  }

  std::ofstream out(args.out_path, std::ios::binary);
  std::ofstream summary_out(args.out_path + ".summary.json", std::ios::binary);
  if (!out || !summary_out) {
    std::cerr << "error: cannot write '" << args.out_path << "'\n";
    return kExitInput;
  }
  write_json_lines(out, result.records);
  summary_out << summary_to_json(result.summary, args.timing).dump(2) << '\n';
  if (args.csv) {
    std::ofstream csv(args.out_path + ".csv", std::ios::binary);
    write_csv(csv, result.records);
  }
  std::cout << summary_to_json(result.summary, true).dump(2) << '\n';
  return result.summary.violations == 0 ? kExitPass : kExitViolation;
}

int cmd_eval(const EvalArgs& args) {
  std::optional<SuperpositionSpec> spec;
  CampaignVariant variant{};
  try {
    spec = spec_from_json(read_json_file(args.spec_path));
    variant = campaign_variant_from_string(args.variant);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    Json report;
    bool ok = true;
    switch (variant) {
      case CampaignVariant::constrained:
      case CampaignVariant::unconstrained:
      case CampaignVariant::minimized: {
        const BoundReport r =
            evaluate_bound(*spec, bound_variant_from_string(to_string(variant)));
        report = report_to_json(r);
        ok = r.holds();
        break;
      }
      case CampaignVariant::exact: {
        const double direct = superposition_entanglement(*spec);
        const double formula = exact_biorthogonal_entanglement(*spec);
        report = Json{{"variant", "exact"},
                      {"superposition_entanglement", direct},
                      {"formula", formula},
                      {"difference", formula - direct}};
        ok = std::abs(formula - direct) < kInequalitySlack;
        break;
      }
      case CampaignVariant::assistant: {
        const AssistantCheckReport r = assistant_state_check(*spec);
        report = report_to_json(r);
        ok = r.all_ok();
        break;
      }
    }
    std::cout << report.dump(2) << '\n';
    return ok ? kExitPass : kExitViolation;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
  } catch (const DegenerateInputError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
  } catch (const DomainError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
  }
  return kExitPrecondition;
}

int cmd_coeffs(int n) {
  try {
    std::cout << coeffs_to_json(normalization_coeffs(n)).dump(2) << '\n';
    return kExitPass;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement bounds for superpositions of bipartite pure states"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded Monte Carlo verification campaign");
  verify_cmd->add_option("--config", verify.config_path, "Ensemble config (JSON)")->required();
  verify_cmd->add_option("--trials", verify.trials, "Number of trials");
  verify_cmd->add_option("--seed", verify.seed, "Override the config seed");
  verify_cmd->add_option("--variant", verify.variant, "Variant to verify")
      ->check(CLI::IsMember({"constrained", "unconstrained", "minimized", "exact", "assistant"}));
  verify_cmd->add_option("--out", verify.out_path, "JSON-lines output path")->required();
  verify_cmd->add_flag("--csv", verify.csv, "Also write <out>.csv");
  verify_cmd->add_flag("--timing", verify.timing, "Include runtime_seconds in <out>.summary.json");
  verify_cmd->add_flag("--no-spec", verify.no_spec, "Omit the drawn spec from each record");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = hardware)");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one serialized superposition");
  eval_cmd->add_option("spec", eval.spec_path, "Superposition spec (JSON)")->required();
  eval_cmd->add_option("--variant", eval.variant, "Variant to evaluate")
      ->check(CLI::IsMember({"constrained", "unconstrained", "minimized", "exact", "assistant"}));

  int n = 0;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Print the N_i^2 table for n components");
  coeffs_cmd->add_option("n", n, "Number of components")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*verify_cmd) return cmd_verify(verify);
  if (*eval_cmd) return cmd_eval(eval);
  return cmd_coeffs(n);
}
