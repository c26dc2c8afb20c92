#pragma once

// Upper bounds on the entanglement of an n-component superposition in terms
// of the entanglements of its components.
//
// All three variants share the left-hand side
//   ||sum_i alpha_i phi_i||^2 * E(normalized superposition)
// and differ in their right-hand side:
//   constrained    sum_i N_i^2 |alpha_i|^2 E(phi_i) + h,  with sum_i N_i^2 |alpha_i|^2 = 1
//   unconstrained  the same with h replaced by h + log2(S) S,  S = sum_i N_i^2 |alpha_i|^2
//   minimized      the unconstrained right-hand side minimized over every
//                  assignment of the N_i^2 values to the components

#include <optional>
#include <string_view>
#include <vector>

#include "superbound/coefficients.hpp"
#include "superbound/superposition.hpp"

namespace superbound {

/// Slack allowed on every verified inequality.
inline constexpr double kInequalitySlack = 1e-9;
/// Largest n for which bound_minimized enumerates all n! assignments.
inline constexpr int kMaxMinimizedComponents = 8;

enum class BoundVariant { constrained, unconstrained, minimized };

std::string_view to_string(BoundVariant variant);
/// Throws std::invalid_argument for an unknown name.
BoundVariant bound_variant_from_string(std::string_view name);

struct BoundReport {
  BoundVariant variant = BoundVariant::constrained;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;         // rhs - lhs
  double correction = 0.0;  // h (constrained) or the unconstrained correction
  /// Minimized variant only: component i is paired with N^2 entry permutation[i].
  std::optional<std::vector<int>> permutation;
  std::vector<double> component_entanglements;
  double squared_norm = 0.0;
  double superposition_entanglement = 0.0;

  bool holds(double slack = kInequalitySlack) const { return gap >= -slack; }
};

/// Requires sum_i N_i^2 |alpha_i|^2 = 1 within 1e-9 (PreconditionError),
/// n <= kMaxBoundComponents (DomainError) and a non-vanishing superposition
/// (DegenerateInputError).
BoundReport bound_constrained(const SuperpositionSpec& spec);

/// No coefficient constraint. Same DomainError and DegenerateInputError cases.
BoundReport bound_unconstrained(const SuperpositionSpec& spec);

/// Exhaustive search over the n! assignments in lexicographic order; ties go
/// to the lexicographically smallest permutation. Throws DomainError for
/// n > kMaxMinimizedComponents.
BoundReport bound_minimized(const SuperpositionSpec& spec);

/// Unconstrained right-hand side for a given assignment of N^2 values.
double unconstrained_rhs(std::span<const Complex> alphas, std::span<const double> n_squared,
                         std::span<const double> component_entanglements);

BoundReport evaluate_bound(const SuperpositionSpec& spec, BoundVariant variant);

}  // namespace superbound
