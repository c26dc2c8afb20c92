#include "superbound/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "superbound/errors.hpp"

namespace superbound {

namespace {

bool all_finite(const ComplexMatrix& m) {
  return m.array().isFinite().all();
}

void require_same_shape(const BipartitePureState& x, const BipartitePureState& y) {
  if (x.dim_a() != y.dim_a() || x.dim_b() != y.dim_b()) {
    throw ShapeError("state shapes differ: " + std::to_string(x.dim_a()) + "x" +
                     std::to_string(x.dim_b()) + " vs " + std::to_string(y.dim_a()) + "x" +
                     std::to_string(y.dim_b()));
  }
}

}  // namespace

BipartitePureState::BipartitePureState(ComplexMatrix amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.rows() < 1 || amplitudes_.cols() < 1) {
    throw InvariantError("bipartite state needs dim_a >= 1 and dim_b >= 1");
  }
  if (!all_finite(amplitudes_)) {
    throw InvariantError("bipartite state has non-finite amplitudes");
  }
}

BipartitePureState BipartitePureState::basis(int dim_a, int dim_b, int i, int j) {
  if (i < 0 || i >= dim_a || j < 0 || j >= dim_b) {
    throw DomainError("basis index out of range");
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim_a, dim_b);
  m(i, j) = 1.0;
  return BipartitePureState(std::move(m));
}

bool BipartitePureState::is_normalized(double tol) const {
  return std::abs(squared_norm() - 1.0) <= tol;
}

BipartitePureState BipartitePureState::normalized() const {
  const double n2 = squared_norm();
  if (n2 <= tolerance::kZeroNorm) {
    throw DegenerateInputError("cannot normalize a vanishing state");
  }
  return BipartitePureState(amplitudes_ / std::sqrt(n2));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw InvariantError("density matrix must be square and non-empty");
  }
  if (!all_finite(matrix_)) {
    throw InvariantError("density matrix has non-finite entries");
  }
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  const double skew = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (skew > tolerance::kHermitian * scale) {
    throw InvariantError("density matrix is not Hermitian (max |M - M^dagger| = " +
                         std::to_string(skew) + ")");
  }
}

bool DensityMatrix::is_normalized(double tol) const {
  return std::abs(trace() - 1.0) <= tol;
}

RealVector DensityMatrix::normalized_eigenvalues() const {
  const double tr = trace();
  if (!(tr > 0.0)) {
    throw InvariantError("density matrix trace must be positive");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_ / tr,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigendecomposition failed");
  }
  RealVector eig = solver.eigenvalues();
  for (double& v : eig) {
    if (v < -tolerance::kEigenClip) {
      throw InvariantError("density matrix has eigenvalue " + std::to_string(v) +
                           " below the clipping threshold");
    }
    v = std::max(v, 0.0);
  }
  return eig / eig.sum();
}

double SchmidtSpectrum::squared_sum() const {
  return std::accumulate(values.begin(), values.end(), 0.0,
                         [](double acc, double v) { return acc + v * v; });
}

std::vector<double> SchmidtSpectrum::probabilities() const {
  const double total = squared_sum();
  std::vector<double> p;
  p.reserve(values.size());
  for (double v : values) p.push_back(v * v / total);
  return p;
}

Complex inner_product(const BipartitePureState& x, const BipartitePureState& y) {
  require_same_shape(x, y);
  return (x.amplitudes().conjugate().cwiseProduct(y.amplitudes())).sum();
}

DensityMatrix partial_trace_a(const BipartitePureState& s) {
  const auto& x = s.amplitudes();
  // (rho_B)_{jk} = sum_i x_ij conj(x_ik)
  return DensityMatrix(x.transpose() * x.conjugate());
}

DensityMatrix partial_trace_b(const BipartitePureState& s) {
  const auto& x = s.amplitudes();
  return DensityMatrix(x * x.adjoint());
}

SchmidtSpectrum schmidt(const BipartitePureState& s) {
  Eigen::JacobiSVD<ComplexMatrix> svd(s.amplitudes());
  const RealVector& sv = svd.singularValues();
  if (!sv.array().isFinite().all()) {
    throw NumericError("singular value decomposition produced non-finite values");
  }
  SchmidtSpectrum out;
  out.values.assign(sv.data(), sv.data() + sv.size());
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p >= tolerance::kEntropyFloor) h -= p * std::log2(p);
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const RealVector eig = rho.normalized_eigenvalues();
  return shannon_entropy(std::span<const double>(eig.data(), eig.size()));
}

double entanglement(const BipartitePureState& s) {
  if (s.squared_norm() <= tolerance::kZeroNorm) {
    throw DegenerateInputError("entanglement of a vanishing state is undefined");
  }
  const auto p = schmidt(s).probabilities();
  return shannon_entropy(p);
}

}  // namespace superbound
