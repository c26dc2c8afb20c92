#pragma once

// Monte Carlo verification campaigns: draw a spec per trial, evaluate one
// variant, record both sides and the named checks.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superbound/ensembles.hpp"
#include "superbound/serialization.hpp"

namespace superbound {

enum class CampaignVariant { constrained, unconstrained, minimized, exact, assistant };

std::string_view to_string(CampaignVariant variant);
/// Throws std::invalid_argument for an unknown name.
CampaignVariant campaign_variant_from_string(std::string_view name);

struct TrialRecord {
  std::uint64_t trial_id = 0;
  EnsembleConfig config;
  CampaignVariant variant = CampaignVariant::constrained;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double correction = 0.0;
  std::vector<double> component_entanglements;
  std::map<std::string, bool> checks;
  std::optional<std::vector<int>> permutation;
  std::optional<SuperpositionSpec> spec;
  /// Set when evaluation threw; the trial counts as a violation.
  std::optional<std::string> error;

  bool passed() const;
};

struct CampaignSummary {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  double min_gap = 0.0;
  double mean_gap = 0.0;
  double max_gap = 0.0;
  double runtime_seconds = 0.0;
};

struct CampaignOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  bool include_spec = true;
};

struct CampaignResult {
  std::vector<TrialRecord> records;  // ordered by trial_id
  CampaignSummary summary;
};

/// Throws PreconditionError if the variant cannot be evaluated on specs
/// drawn from the config (e.g. constrained bound without constrained
/// coefficients).
void check_variant_compatible(const EnsembleConfig& config, CampaignVariant variant);

/// Evaluates one spec. Exceptions from the numerics are caught and stored
/// in TrialRecord::error.
TrialRecord evaluate_trial(const SuperpositionSpec& spec, CampaignVariant variant);

TrialRecord run_trial(const EnsembleConfig& config, CampaignVariant variant,
                      std::uint64_t trial_id, bool include_spec = true);

/// Trials are spread over worker threads; records come back in trial-id
/// order, so the output depends only on (config, trials, variant).
CampaignResult run_campaign(const EnsembleConfig& config, std::uint64_t trials,
                            CampaignVariant variant, const CampaignOptions& options = {});

CampaignSummary summarize(const std::vector<TrialRecord>& records);

Json record_to_json(const TrialRecord& record);
Json summary_to_json(const CampaignSummary& summary, bool include_runtime);

/// One compact JSON object per line.
void write_json_lines(std::ostream& out, const std::vector<TrialRecord>& records);
/// Header then one row per record: trial_id,variant,lhs,rhs,gap,correction.
void write_csv(std::ostream& out, const std::vector<TrialRecord>& records);

}  // namespace superbound
