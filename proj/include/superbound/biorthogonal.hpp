#pragma once

#include <span>
#include <vector>

#include "superbound/superposition.hpp"

namespace superbound {

inline constexpr double kBiorthogonalTolerance = 1e-10;

/// True iff every pair i != j has vanishing reduced-state overlaps on both
/// sides: |Tr[rho_A,i rho_A,j]| < tol and |Tr[rho_B,i rho_B,j]| < tol.
/// Throws ShapeError on mismatched dimensions.
bool is_biorthogonal(std::span<const BipartitePureState> components,
                     double tol = kBiorthogonalTolerance);

/// Largest reduced-state overlap over all pairs and both sides.
double max_reduced_overlap(std::span<const BipartitePureState> components);

/// sum_i |alpha_i|^2 E(phi_i) - sum_i |alpha_i|^2 log2 |alpha_i|^2, which
/// equals the entanglement of the superposition for biorthogonal components.
/// Requires is_biorthogonal and sum |alpha_i|^2 = 1 within 1e-9
/// (PreconditionError otherwise).
double exact_biorthogonal_entanglement(const SuperpositionSpec& spec);

struct MixingEntropyBounds {
  double lower = 0.0;  // sum_i p_i S(rho_i)
  double mid = 0.0;    // S(sum_i p_i rho_i)
  double upper = 0.0;  // lower + H(p)

  bool holds(double slack = 1e-9) const {
    return lower - slack <= mid && mid <= upper + slack;
  }
};

/// Entropy of a mixture bracketed by the average entropy and the average
/// entropy plus the Shannon entropy of the weights. Requires a probability
/// vector (within 1e-9) and unit-trace density matrices of a common
/// dimension; PreconditionError otherwise.
MixingEntropyBounds mixing_entropy_bounds(std::span<const double> probs,
                                          std::span<const DensityMatrix> rhos);

}  // namespace superbound
