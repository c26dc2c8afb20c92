#include "superbound/biorthogonal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "superbound/coefficients.hpp"
#include "superbound/errors.hpp"

namespace superbound {

namespace {

// Tr[x y] for square matrices of equal size.
Complex trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  return x.cwiseProduct(y.transpose()).sum();
}

struct ReducedPair {
  ComplexMatrix a;
  ComplexMatrix b;
};

std::vector<ReducedPair> reduced_states(std::span<const BipartitePureState> components) {
  std::vector<ReducedPair> out;
  out.reserve(components.size());
  for (const auto& c : components) {
    if (c.dim_a() != components.front().dim_a() || c.dim_b() != components.front().dim_b()) {
      throw ShapeError("biorthogonality test needs components of a common shape");
    }
    out.push_back({partial_trace_b(c).matrix(), partial_trace_a(c).matrix()});
  }
  return out;
}

}  // namespace

double max_reduced_overlap(std::span<const BipartitePureState> components) {
  const auto reduced = reduced_states(components);
  double worst = 0.0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      worst = std::max({worst, std::abs(trace_of_product(reduced[i].a, reduced[j].a)),
                        std::abs(trace_of_product(reduced[i].b, reduced[j].b))});
    }
  }
  return worst;
}

bool is_biorthogonal(std::span<const BipartitePureState> components, double tol) {
  return max_reduced_overlap(components) < tol;
}

double exact_biorthogonal_entanglement(const SuperpositionSpec& spec) {
  if (!is_biorthogonal(spec.components())) {
    throw PreconditionError("components are not biorthogonal");
  }
  const double weight = spec.coefficient_weight();
  if (!(std::abs(weight - 1.0) <= 1e-9)) {
    throw PreconditionError("exact formula requires sum |alpha_i|^2 = 1 (sum = " +
                            std::to_string(weight) + ")");
  }
  double e = 0.0;
  for (int i = 0; i < spec.size(); ++i) {
    e += std::norm(spec.coefficients()[i]) * entanglement(spec.components()[i]);
  }
  return e + mixing_entropy(spec.coefficients());
}

MixingEntropyBounds mixing_entropy_bounds(std::span<const double> probs,
                                          std::span<const DensityMatrix> rhos) {
  if (probs.empty() || probs.size() != rhos.size()) {
    throw PreconditionError("need one probability per density matrix");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw PreconditionError("probabilities must be non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw PreconditionError("probabilities must sum to 1 (sum = " + std::to_string(total) + ")");
  }
  const int dim = rhos.front().dim();
  ComplexMatrix mixture = ComplexMatrix::Zero(dim, dim);
  MixingEntropyBounds out;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    if (rhos[i].dim() != dim) throw PreconditionError("density matrices differ in dimension");
    if (!rhos[i].is_normalized(1e-9)) throw PreconditionError("density matrices must have unit trace");
    if (probs[i] > 0.0) out.lower += probs[i] * von_neumann_entropy(rhos[i]);
    mixture += probs[i] * rhos[i].matrix();
  }
  out.mid = von_neumann_entropy(DensityMatrix(mixture));
  out.upper = out.lower + shannon_entropy(probs);
  return out;
}

}  // namespace superbound
