#include "superbound/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "superbound/assistant.hpp"
#include "superbound/biorthogonal.hpp"
#include "superbound/bounds.hpp"
#include "superbound/errors.hpp"

namespace superbound {

std::string_view to_string(CampaignVariant variant) {
  switch (variant) {
    case CampaignVariant::constrained:
      return "constrained";
    case CampaignVariant::unconstrained:
      return "unconstrained";
    case CampaignVariant::minimized:
      return "minimized";
    case CampaignVariant::exact:
      return "exact";
    case CampaignVariant::assistant:
      return "assistant";
  }
  return "unknown";
}

CampaignVariant campaign_variant_from_string(std::string_view name) {
  for (CampaignVariant v : {CampaignVariant::constrained, CampaignVariant::unconstrained,
                            CampaignVariant::minimized, CampaignVariant::exact,
                            CampaignVariant::assistant}) {
    if (name == to_string(v)) return v;
  }
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

bool TrialRecord::passed() const {
  if (error) return false;
  if (gap < -kInequalitySlack) return false;
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

namespace {

double coefficient_weight(std::span<const Complex> alphas) {
  double w = 0.0;
  for (const Complex& a : alphas) w += std::norm(a);
  return w;
}

// Entropy sandwich on the B-side reduced states of the components, weighted
// by the normalized |alpha_i|^2.
bool component_sandwich_holds(const SuperpositionSpec& spec) {
  const double total = spec.coefficient_weight();
  std::vector<double> probs;
  std::vector<DensityMatrix> rhos;
  for (int i = 0; i < spec.size(); ++i) {
    probs.push_back(std::norm(spec.coefficients()[i]) / total);
    rhos.push_back(partial_trace_a(spec.components()[i]));
  }
  return mixing_entropy_bounds(probs, rhos).holds();
}

void fill_from(TrialRecord& record, const BoundReport& report) {
  record.lhs = report.lhs;
  record.rhs = report.rhs;
  record.gap = report.gap;
  record.correction = report.correction;
  record.component_entanglements = report.component_entanglements;
  record.permutation = report.permutation;
  record.checks["inequality"] = report.holds();
}

}  // namespace

void check_variant_compatible(const EnsembleConfig& config, CampaignVariant variant) {
  validate(config);
  const bool fixed = config.coefficient_mode == CoefficientMode::fixed;
  switch (variant) {
    case CampaignVariant::constrained: {
      if (fixed) {
        const auto coeffs = normalization_coeffs(config.n);
        h_constrained(config.fixed_coefficients, coeffs);  // throws if unmet
      } else if (config.coefficient_mode != CoefficientMode::constrained) {
        throw PreconditionError("constrained variant needs coefficient_mode 'constrained'");
      }
      break;
    }
    case CampaignVariant::unconstrained:
      break;
    case CampaignVariant::minimized:
      if (config.n > kMaxMinimizedComponents) {
        throw PreconditionError("minimized variant supports n <= " +
                                std::to_string(kMaxMinimizedComponents));
      }
      break;
    case CampaignVariant::exact:
    case CampaignVariant::assistant: {
      if (variant == CampaignVariant::exact && config.family != Family::biorthogonal_blocks) {
        throw PreconditionError("exact variant needs family 'biorthogonal_blocks'");
      }
      if (variant == CampaignVariant::assistant && config.n > kMaxAssistantComponents) {
        throw PreconditionError("assistant variant supports n <= " +
                                std::to_string(kMaxAssistantComponents));
      }
      if (fixed) {
        if (std::abs(coefficient_weight(config.fixed_coefficients) - 1.0) > 1e-9) {
          throw PreconditionError(std::string(to_string(variant)) +
                                  " variant needs sum |alpha_i|^2 = 1");
        }
      } else if (config.coefficient_mode != CoefficientMode::simplex_uniform) {
        throw PreconditionError(std::string(to_string(variant)) +
                                " variant needs coefficient_mode 'simplex_uniform'");
      }
      break;
    }
  }
}

TrialRecord evaluate_trial(const SuperpositionSpec& spec, CampaignVariant variant) {
  TrialRecord record;
  record.variant = variant;
  try {
    switch (variant) {
      case CampaignVariant::constrained:
        fill_from(record, bound_constrained(spec));
        record.checks["sandwich"] = component_sandwich_holds(spec);
        break;
      case CampaignVariant::unconstrained:
        fill_from(record, bound_unconstrained(spec));
        record.checks["sandwich"] = component_sandwich_holds(spec);
        break;
      case CampaignVariant::minimized: {
        const BoundReport minimized = bound_minimized(spec);
        fill_from(record, minimized);
        record.checks["sandwich"] = component_sandwich_holds(spec);
        record.checks["below_unconstrained"] =
            minimized.rhs <= bound_unconstrained(spec).rhs + 1e-12;
        break;
      }
      case CampaignVariant::exact: {
        record.checks["biorthogonal"] = is_biorthogonal(spec.components());
        record.lhs = superposition_entanglement(spec);
        record.rhs = exact_biorthogonal_entanglement(spec);
        record.gap = record.rhs - record.lhs;
        record.correction = mixing_entropy(spec.coefficients());
        for (const auto& c : spec.components()) {
          record.component_entanglements.push_back(entanglement(c));
        }
        record.checks["biorth_equality"] = std::abs(record.gap) < kInequalitySlack;
        break;
      }
      case CampaignVariant::assistant: {
        const AssistantCheckReport report = assistant_state_check(spec);
        record.lhs = report.leading_weight * report.leading_entanglement;
        record.rhs = report.upper_chain;
        record.gap = record.rhs - record.lhs;
        record.correction = mixing_entropy(spec.coefficients());
        for (const auto& c : spec.components()) {
          record.component_entanglements.push_back(entanglement(c));
        }
        record.checks["norm_partition"] = report.norm_partition_ok();
        record.checks["sandwich_lower"] = report.sandwich_lower_ok;
        record.checks["sandwich_upper"] = report.sandwich_upper_ok;
        record.checks["final_bound"] = report.final_bound_ok;
        break;
      }
    }
  } catch (const std::exception& e) {
    record.error = e.what();
  }
  return record;
}

TrialRecord run_trial(const EnsembleConfig& config, CampaignVariant variant,
                      std::uint64_t trial_id, bool include_spec) {
  SuperpositionSpec spec = draw_spec(config, trial_id);
  TrialRecord record = evaluate_trial(spec, variant);
  record.trial_id = trial_id;
  record.config = config;
  if (include_spec) record.spec = std::move(spec);
  return record;
}

CampaignResult run_campaign(const EnsembleConfig& config, std::uint64_t trials,
                            CampaignVariant variant, const CampaignOptions& options) {
  check_variant_compatible(config, variant);
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::optional<TrialRecord>> slots(trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t id = next++; id < trials; id = next++) {
      slots[id] = run_trial(config, variant, id, options.include_spec);
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(trials, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CampaignResult result;
  result.records.reserve(trials);
  for (auto& slot : slots) result.records.push_back(std::move(*slot));
  result.summary = summarize(result.records);
  result.summary.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

CampaignSummary summarize(const std::vector<TrialRecord>& records) {
  CampaignSummary s;
  s.trials = records.size();
  double total = 0.0;
  std::uint64_t evaluated = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    if (!r.passed()) ++s.violations;
    if (r.error) continue;
    ++evaluated;
    total += r.gap;
    lo = std::min(lo, r.gap);
    hi = std::max(hi, r.gap);
  }
  if (evaluated > 0) {
    s.min_gap = lo;
    s.max_gap = hi;
    s.mean_gap = total / static_cast<double>(evaluated);
  }
  return s;
}

Json record_to_json(const TrialRecord& record) {
  Json j{{"trial_id", record.trial_id},
         {"config", config_to_json(record.config)},
         {"variant", to_string(record.variant)},
         {"lhs", record.lhs},
         {"rhs", record.rhs},
         {"gap", record.gap},
         {"correction", record.correction},
         {"component_entanglements", record.component_entanglements},
         {"checks", record.checks},
         {"passed", record.passed()}};
  if (record.permutation) j["permutation"] = *record.permutation;
  if (record.error) j["error"] = *record.error;
  if (record.spec) j["spec"] = spec_to_json(*record.spec);
  return j;
}

Json summary_to_json(const CampaignSummary& summary, bool include_runtime) {
  Json j{{"trials", summary.trials},
         {"violations", summary.violations},
         {"min_gap", summary.min_gap},
         {"mean_gap", summary.mean_gap},
         {"max_gap", summary.max_gap}};
  if (include_runtime) j["runtime_seconds"] = summary.runtime_seconds;
  return j;
}

void write_json_lines(std::ostream& out, const std::vector<TrialRecord>& records) {
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "trial_id,variant,lhs,rhs,gap,correction\n";
  std::ostringstream row;
  row << std::setprecision(17);
  for (const auto& r : records) {
    row.str("");
    row << r.trial_id << ',' << to_string(r.variant) << ',' << r.lhs << ',' << r.rhs << ','
        << r.gap << ',' << r.correction << '\n';
    out << row.str();
  }
}

}  // namespace superbound
