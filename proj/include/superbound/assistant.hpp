#pragma once

// Numerical walk through the auxiliary-register argument behind the bounds.
//
// The extended state |L> = sum_i alpha_i |i>_a |phi_i>_AB is treated as a
// bipartite state between (a, A) and B. Rewriting the register basis |i> in
// the xi basis of basis_matrix(n) splits it as
//   |L> = sum_k |xi_k> |C_k>,   C_1 = sum_i (alpha_i / N_i) phi_i,
// and the check confirms, with S(rho_B) computed from |L> directly:
//   norm partition   sum_k ||C_k||^2 = 1
//   upper sandwich   S(rho_B) <= sum_i |alpha_i|^2 E(phi_i) + H(|alpha|^2)
//   lower sandwich   sum_k ||C_k||^2 E(C_k) <= S(rho_B)
//   final bound      ||C_1||^2 E(C_1) <= sum_i |alpha_i|^2 E(phi_i) + H(|alpha|^2)

#include <vector>

#include "superbound/superposition.hpp"

namespace superbound {

inline constexpr int kMaxAssistantComponents = 8;
inline constexpr long kMaxAssistantAmplitudes = 65536;

struct AssistantCheckReport {
  double s_rho_b = 0.0;
  /// | sum_k ||C_k||^2 - 1 |
  double norm_partition_residual = 0.0;
  /// max-norm distance between rho_B from |L> and sum_i |alpha_i|^2 Tr_A(phi_i)
  double rho_b_residual = 0.0;
  double leading_weight = 0.0;              // ||C_1||^2
  double leading_entanglement = 0.0;        // E(C_1 / ||C_1||)
  std::vector<double> residual_weights;     // ||C_k||^2, k >= 2
  double lower_chain = 0.0;                 // sum_k ||C_k||^2 E(C_k)
  double upper_chain = 0.0;                 // sum_i |alpha_i|^2 E(phi_i) + H(|alpha|^2)
  bool sandwich_lower_ok = false;
  bool sandwich_upper_ok = false;
  bool final_bound_ok = false;

  bool norm_partition_ok(double tol = 1e-9) const { return norm_partition_residual < tol; }
  bool all_ok() const {
    return norm_partition_ok() && sandwich_lower_ok && sandwich_upper_ok && final_bound_ok;
  }
};

/// Requires sum |alpha_i|^2 = 1 within 1e-9 (PreconditionError),
/// n <= kMaxAssistantComponents and n * dim_a * dim_b <= kMaxAssistantAmplitudes
/// (DomainError).
AssistantCheckReport assistant_state_check(const SuperpositionSpec& spec);

}  // namespace superbound
