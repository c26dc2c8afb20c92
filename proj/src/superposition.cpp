#include "superbound/superposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "superbound/errors.hpp"

namespace superbound {

GramMatrix::GramMatrix(std::span<const BipartitePureState> components) {
  const auto n = static_cast<Eigen::Index>(components.size());
  matrix_ = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    matrix_(i, i) = components[i].squared_norm();
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Complex g = inner_product(components[i], components[j]);
      matrix_(i, j) = g;
      matrix_(j, i) = std::conj(g);
    }
  }
}

double GramMatrix::max_off_diagonal() const {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix_.cols(); ++j) {
      if (i != j) worst = std::max(worst, std::abs(matrix_(i, j)));
    }
  }
  return worst;
}

namespace {

const std::vector<BipartitePureState>& validated(const std::vector<Complex>& coefficients,
                                                 const std::vector<BipartitePureState>& components) {
  if (coefficients.size() < 2) {
    throw InvariantError("a superposition needs at least two components");
  }
  if (coefficients.size() != components.size()) {
    throw ShapeError("coefficient count " + std::to_string(coefficients.size()) +
                     " does not match component count " + std::to_string(components.size()));
  }
  const auto& first = components.front();
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.dim_a() != first.dim_a() || c.dim_b() != first.dim_b()) {
      throw ShapeError("component " + std::to_string(i) + " has a different shape");
    }
    if (!c.is_normalized(kComponentNormTolerance)) {
      throw InvariantError("component " + std::to_string(i) + " is not normalized");
    }
  }
  bool any_nonzero = false;
  for (const Complex& a : coefficients) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvariantError("coefficients must be finite");
    }
    any_nonzero = any_nonzero || a != Complex(0.0, 0.0);
  }
  if (!any_nonzero) {
    throw InvariantError("coefficients must not all be zero");
  }
  return components;
}

}  // namespace

SuperpositionSpec::SuperpositionSpec(std::vector<Complex> coefficients,
                                     std::vector<BipartitePureState> components)
    : coefficients_(std::move(coefficients)),
      components_(std::move(components)),
      gram_(validated(coefficients_, components_)) {}

double SuperpositionSpec::coefficient_weight() const {
  double w = 0.0;
  for (const Complex& a : coefficients_) w += std::norm(a);
  return w;
}

SuperpositionSpec SuperpositionSpec::with_coefficients(std::vector<Complex> coefficients) const {
  return SuperpositionSpec(std::move(coefficients), components_);
}

BipartitePureState combine(const SuperpositionSpec& spec) {
  ComplexMatrix sum = ComplexMatrix::Zero(spec.dim_a(), spec.dim_b());
  for (int i = 0; i < spec.size(); ++i) {
    sum += spec.coefficients()[i] * spec.components()[i].amplitudes();
  }
  return BipartitePureState(std::move(sum));
}

double squared_norm(const SuperpositionSpec& spec) {
  const auto& alpha = spec.coefficients();
  const ComplexVector a = Eigen::Map<const ComplexVector>(alpha.data(), spec.size());
  const Complex value = a.dot(spec.gram().matrix() * a);  // conj(a)^T G a
  return std::max(value.real(), 0.0);
}

double superposition_entanglement(const SuperpositionSpec& spec) {
  if (squared_norm(spec) <= tolerance::kZeroNorm) {
    throw DegenerateInputError("superposition vanishes; entanglement is undefined");
  }
  return entanglement(combine(spec));
}

}  // namespace superbound
