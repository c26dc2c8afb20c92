#pragma once

// Normalization coefficients N_i of the auxiliary-register basis change, the
// basis matrix itself, and the entropy-type correction terms built on them.

#include <optional>
#include <span>
#include <vector>

#include "superbound/core.hpp"

namespace superbound {

__extension__ typedef unsigned __int128 UInt128;

inline constexpr int kMinComponents = 2;
/// Largest n accepted by normalization_coeffs and basis_matrix.
inline constexpr int kMaxCoefficientComponents = 16;
/// Largest n for which every N_i^2 is a finite double; bounds require it.
inline constexpr int kMaxBoundComponents = 11;

/// The squared normalization coefficients (N_1^2, ..., N_n^2):
///   N_1^2 = 2,  N_j^2 = prod_{i<j} N_i^2 + 1 for 1 < j < n,
///   N_n^2 = prod_{i<n} N_i^2.
///
/// Values grow doubly exponentially. `n_squared` holds doubles and becomes
/// +inf once a value exceeds the double range (n >= 12); `log_n_squared`
/// carries the natural logarithms, computed in the log domain, and stays
/// finite for every supported n. `n_squared_exact` is populated only while
/// every entry fits in 128 bits (n <= 8).
struct NormalizationCoeffs {
  int n = 0;
  std::vector<double> n_squared;
  std::vector<double> log_n_squared;
  std::optional<std::vector<UInt128>> n_squared_exact;

  /// sum_i 1/N_i^2 - 1, evaluated from the log-domain values.
  double reciprocal_sum_residual() const;
  bool all_finite() const;
};

/// Throws DomainError unless 2 <= n <= 16.
NormalizationCoeffs normalization_coeffs(int n);

/// Row i (0-based) holds the coordinates of the auxiliary basis ket |i+1> in
/// the orthonormal xi basis. The unnormalized row i has entries
///   1 at xi_1,  1 - N_{k-1}^2 at xi_k for 2 <= k <= i+1,  1 at xi_{i+2}
/// (the trailing 1 is absent on the last row), and its norm is N_{i+1}.
/// Throws DomainError unless 2 <= n <= 16.
RealMatrix basis_matrix(int n);

/// p_i = N_i^2 |alpha_i|^2, exactly 0 where alpha_i == 0.
std::vector<double> weighted_probabilities(std::span<const Complex> alphas,
                                           std::span<const double> n_squared);

/// -sum p_i log2 p_i for p_i = N_i^2 |alpha_i|^2. Requires sum p_i = 1
/// within 1e-9 (PreconditionError otherwise) and matching lengths
/// (ShapeError).
double h_constrained(std::span<const Complex> alphas, const NormalizationCoeffs& coeffs);

/// -sum p_i log2 p_i + log2(sum p) * sum p with p_i = N_i^2 |alpha_i|^2 under
/// an arbitrary assignment of N^2 values; no constraint on the alphas.
double unconstrained_correction(std::span<const Complex> alphas,
                                std::span<const double> n_squared);

/// -sum |alpha_i|^2 log2 |alpha_i|^2.
double mixing_entropy(std::span<const Complex> alphas);

}  // namespace superbound
