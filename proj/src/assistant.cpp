#include "superbound/assistant.hpp"

#include <cmath>
#include <string>

#include "superbound/bounds.hpp"
#include "superbound/coefficients.hpp"
#include "superbound/errors.hpp"

namespace superbound {

AssistantCheckReport assistant_state_check(const SuperpositionSpec& spec) {
  const int n = spec.size();
  const int da = spec.dim_a();
  const int db = spec.dim_b();
  if (n > kMaxAssistantComponents) {
    throw DomainError("assistant check supports at most " +
                      std::to_string(kMaxAssistantComponents) + " components");
  }
  if (static_cast<long>(n) * da * db > kMaxAssistantAmplitudes) {
    throw DomainError("assistant state exceeds " + std::to_string(kMaxAssistantAmplitudes) +
                      " amplitudes");
  }
  const auto& alpha = spec.coefficients();
  const auto& phi = spec.components();
  if (!(std::abs(spec.coefficient_weight() - 1.0) <= 1e-9)) {
    throw PreconditionError("assistant state requires sum |alpha_i|^2 = 1");
  }

  AssistantCheckReport report;

  // |L> with rows indexed by (register i, A index a) and columns by B.
  ComplexMatrix lambda(static_cast<Eigen::Index>(n) * da, db);
  for (int i = 0; i < n; ++i) {
    lambda.middleRows(static_cast<Eigen::Index>(i) * da, da) = alpha[i] * phi[i].amplitudes();
  }
  const BipartitePureState assistant(std::move(lambda));
  const DensityMatrix rho_b = partial_trace_a(assistant);
  report.s_rho_b = von_neumann_entropy(rho_b);

  ComplexMatrix mixed = ComplexMatrix::Zero(db, db);
  std::vector<double> component_e(n);
  for (int i = 0; i < n; ++i) {
    mixed += std::norm(alpha[i]) * partial_trace_a(phi[i]).matrix();
    component_e[i] = entanglement(phi[i]);
  }
  report.rho_b_residual = (rho_b.matrix() - mixed).cwiseAbs().maxCoeff();

  report.upper_chain = mixing_entropy(alpha);
  for (int i = 0; i < n; ++i) report.upper_chain += std::norm(alpha[i]) * component_e[i];

  // C_k = sum_i alpha_i M(i, k) phi_i.
  const RealMatrix basis = basis_matrix(n);
  double partition = 0.0;
  for (int k = 0; k < n; ++k) {
    ComplexMatrix c = ComplexMatrix::Zero(da, db);
    for (int i = 0; i < n; ++i) c += (alpha[i] * basis(i, k)) * phi[i].amplitudes();
    const BipartitePureState ck(std::move(c));
    const double weight = ck.squared_norm();
    partition += weight;
    const double e = weight > tolerance::kZeroNorm ? entanglement(ck) : 0.0;
    report.lower_chain += weight * e;
    if (k == 0) {
      report.leading_weight = weight;
      report.leading_entanglement = e;
    } else {
      report.residual_weights.push_back(weight);
    }
  }
  report.norm_partition_residual = std::abs(partition - 1.0);

  report.sandwich_upper_ok = report.s_rho_b <= report.upper_chain + kInequalitySlack;
  report.sandwich_lower_ok = report.lower_chain <= report.s_rho_b + kInequalitySlack;
  report.final_bound_ok =
      report.leading_weight * report.leading_entanglement <= report.upper_chain + kInequalitySlack;
  return report;
}

}  // namespace superbound
