#include "superbound/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "superbound/errors.hpp"

namespace superbound {

namespace {

void require_coefficient_range(int n) {
  if (n < kMinComponents || n > kMaxCoefficientComponents) {
    throw DomainError("component count must lie in [" + std::to_string(kMinComponents) + ", " +
                      std::to_string(kMaxCoefficientComponents) + "], got " + std::to_string(n));
  }
}

// log(exp(x) + 1) for x = log of a large positive value.
double log_plus_one(double log_value) {
  return log_value + std::log1p(std::exp(-log_value));
}

// log(exp(x) - 1) for x > 0.
double log_minus_one(double log_value) {
  return log_value + std::log1p(-std::exp(-log_value));
}

std::optional<std::vector<UInt128>> exact_recursion(int n) {
  std::vector<UInt128> exact;
  exact.reserve(n);
  UInt128 product = 1;
  for (int j = 0; j < n; ++j) {
    UInt128 value = 0;
    if (j == 0) {
      value = 2;
    } else if (j < n - 1) {
      if (product == std::numeric_limits<UInt128>::max()) return std::nullopt;
      value = product + 1;
    } else {
      value = product;
    }
    exact.push_back(value);
    if (j < n - 1 && __builtin_mul_overflow(product, value, &product)) return std::nullopt;
  }
  return exact;
}

}  // namespace

double NormalizationCoeffs::reciprocal_sum_residual() const {
  double sum = 0.0;
  for (double l : log_n_squared) sum += std::exp(-l);
  return sum - 1.0;
}

bool NormalizationCoeffs::all_finite() const {
  return std::all_of(n_squared.begin(), n_squared.end(),
                     [](double v) { return std::isfinite(v); });
}

NormalizationCoeffs normalization_coeffs(int n) {
  require_coefficient_range(n);
  NormalizationCoeffs out;
  out.n = n;
  out.n_squared.reserve(n);
  out.log_n_squared.reserve(n);

  double product = 1.0;
  double log_product = 0.0;
  for (int j = 0; j < n; ++j) {
    double value = 0.0;
    double log_value = 0.0;
    if (j == 0) {
      value = 2.0;
      log_value = std::log(2.0);
    } else if (j < n - 1) {
      value = product + 1.0;
      log_value = log_plus_one(log_product);
    } else {
      value = product;
      log_value = log_product;
    }
    out.n_squared.push_back(value);
    out.log_n_squared.push_back(log_value);
    product *= value;
    log_product += log_value;
  }
  out.n_squared_exact = exact_recursion(n);
  return out;
}

RealMatrix basis_matrix(int n) {
  const NormalizationCoeffs coeffs = normalization_coeffs(n);
  const auto& log_n2 = coeffs.log_n_squared;
  RealMatrix m = RealMatrix::Zero(n, n);
  for (int row = 0; row < n; ++row) {
    const double log_norm = 0.5 * log_n2[row];
    const double inv_norm = std::exp(-log_norm);
    m(row, 0) = inv_norm;
    for (int k = 1; k <= row; ++k) {
      // (1 - N_k^2) / N_row, with N_k^2 >= 2 so the numerator is negative.
      m(row, k) = -std::exp(log_minus_one(log_n2[k - 1]) - log_norm);
    }
    if (row + 1 < n) m(row, row + 1) = inv_norm;
  }
  return m;
}

std::vector<double> weighted_probabilities(std::span<const Complex> alphas,
                                           std::span<const double> n_squared) {
  if (alphas.size() != n_squared.size()) {
    throw ShapeError("expected " + std::to_string(n_squared.size()) + " coefficients, got " +
                     std::to_string(alphas.size()));
  }
  std::vector<double> p(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double a2 = std::norm(alphas[i]);
    p[i] = a2 == 0.0 ? 0.0 : n_squared[i] * a2;
  }
  return p;
}

double h_constrained(std::span<const Complex> alphas, const NormalizationCoeffs& coeffs) {
  const auto p = weighted_probabilities(alphas, coeffs.n_squared);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(std::abs(total - 1.0) <= 1e-9)) {
    throw PreconditionError("constraint sum N_i^2 |alpha_i|^2 = 1 violated (sum = " +
                            std::to_string(total) + ")");
  }
  return shannon_entropy(p);
}

double unconstrained_correction(std::span<const Complex> alphas,
                                std::span<const double> n_squared) {
  const auto p = weighted_probabilities(alphas, n_squared);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  return shannon_entropy(p) + total * std::log2(total);
}

double mixing_entropy(std::span<const Complex> alphas) {
  std::vector<double> w;
  w.reserve(alphas.size());
  for (const Complex& a : alphas) w.push_back(std::norm(a));
  return shannon_entropy(w);
}

}  // namespace superbound
