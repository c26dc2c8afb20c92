#include "superbound/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "superbound/errors.hpp"

namespace superbound {

std::string_view to_string(BoundVariant variant) {
  switch (variant) {
    case BoundVariant::constrained:
      return "constrained";
    case BoundVariant::unconstrained:
      return "unconstrained";
    case BoundVariant::minimized:
      return "minimized";
  }
  return "unknown";
}

BoundVariant bound_variant_from_string(std::string_view name) {
  if (name == "constrained") return BoundVariant::constrained;
  if (name == "unconstrained") return BoundVariant::unconstrained;
  if (name == "minimized") return BoundVariant::minimized;
  throw std::invalid_argument("unknown bound variant '" + std::string(name) + "'");
}

namespace {

void require_bound_range(const SuperpositionSpec& spec) {
  if (spec.size() > kMaxBoundComponents) {
    throw DomainError("bounds support at most " + std::to_string(kMaxBoundComponents) +
                      " components (N_i^2 overflows a double beyond that)");
  }
}

// Left-hand side and per-component entanglements shared by every variant.
BoundReport measure(const SuperpositionSpec& spec, BoundVariant variant) {
  BoundReport report;
  report.variant = variant;
  report.squared_norm = squared_norm(spec);
  report.superposition_entanglement = superposition_entanglement(spec);
  report.lhs = report.squared_norm * report.superposition_entanglement;
  report.component_entanglements.reserve(spec.size());
  for (const auto& component : spec.components()) {
    report.component_entanglements.push_back(entanglement(component));
  }
  return report;
}

double weighted_entanglement(std::span<const double> p, std::span<const double> entanglements) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] * entanglements[i];
  return sum;
}

}  // namespace

double unconstrained_rhs(std::span<const Complex> alphas, std::span<const double> n_squared,
                         std::span<const double> component_entanglements) {
  const auto p = weighted_probabilities(alphas, n_squared);
  if (component_entanglements.size() != p.size()) {
    throw ShapeError("component entanglement count does not match coefficient count");
  }
  return weighted_entanglement(p, component_entanglements) +
         unconstrained_correction(alphas, n_squared);
}

BoundReport bound_constrained(const SuperpositionSpec& spec) {
  require_bound_range(spec);
  const NormalizationCoeffs coeffs = normalization_coeffs(spec.size());
  const double h = h_constrained(spec.coefficients(), coeffs);
  BoundReport report = measure(spec, BoundVariant::constrained);
  const auto p = weighted_probabilities(spec.coefficients(), coeffs.n_squared);
  report.correction = h;
  report.rhs = weighted_entanglement(p, report.component_entanglements) + h;
  report.gap = report.rhs - report.lhs;
  return report;
}

BoundReport bound_unconstrained(const SuperpositionSpec& spec) {
  require_bound_range(spec);
  BoundReport report = measure(spec, BoundVariant::unconstrained);
  const NormalizationCoeffs coeffs = normalization_coeffs(spec.size());
  report.correction = unconstrained_correction(spec.coefficients(), coeffs.n_squared);
  const auto p = weighted_probabilities(spec.coefficients(), coeffs.n_squared);
  report.rhs = weighted_entanglement(p, report.component_entanglements) + report.correction;
  report.gap = report.rhs - report.lhs;
  return report;
}

BoundReport bound_minimized(const SuperpositionSpec& spec) {
  const int n = spec.size();
  if (n > kMaxMinimizedComponents) {
    throw DomainError("exhaustive minimization is capped at n = " +
                      std::to_string(kMaxMinimizedComponents) + ", got n = " + std::to_string(n));
  }
  require_bound_range(spec);
  BoundReport report = measure(spec, BoundVariant::minimized);
  const NormalizationCoeffs coeffs = normalization_coeffs(n);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> assigned(n);
  std::vector<int> best_perm;
  double best_rhs = 0.0;
  double best_correction = 0.0;
  do {
    for (int i = 0; i < n; ++i) assigned[i] = coeffs.n_squared[perm[i]];
    const double correction = unconstrained_correction(spec.coefficients(), assigned);
    const auto p = weighted_probabilities(spec.coefficients(), assigned);
    const double rhs = weighted_entanglement(p, report.component_entanglements) + correction;
    if (best_perm.empty() || rhs < best_rhs) {
      best_rhs = rhs;
      best_correction = correction;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  report.rhs = best_rhs;
  report.correction = best_correction;
  report.permutation = std::move(best_perm);
  report.gap = report.rhs - report.lhs;
  return report;
}

BoundReport evaluate_bound(const SuperpositionSpec& spec, BoundVariant variant) {
  switch (variant) {
    case BoundVariant::constrained:
      return bound_constrained(spec);
    case BoundVariant::unconstrained:
      return bound_unconstrained(spec);
    case BoundVariant::minimized:
      return bound_minimized(spec);
  }
  throw std::invalid_argument("unknown bound variant");
}

}  // namespace superbound
