#pragma once

// Dense linear algebra for bipartite pure states: inner products, partial
// traces, Schmidt spectra and von Neumann entropy. All entropies are in bits.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace superbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tolerance {
/// Squared-norm window for a state to count as normalized.
inline constexpr double kNormalized = 1e-12;
/// Elementwise Hermiticity tolerance for density matrices.
inline constexpr double kHermitian = 1e-12;
/// Eigenvalues in [-kEigenClip, 0) are clipped to zero; below is an error.
inline constexpr double kEigenClip = 1e-10;
/// Probabilities below this contribute nothing to an entropy sum.
inline constexpr double kEntropyFloor = 1e-14;
/// Squared norms at or below this are treated as the zero vector.
inline constexpr double kZeroNorm = 1e-12;
}  // namespace tolerance

/// A possibly unnormalized pure state of a d_A x d_B system, stored as its
/// amplitude matrix: entry (i, j) is the amplitude of |i>_A |j>_B.
class BipartitePureState {
 public:
  /// Throws InvariantError on empty dimensions or non-finite entries.
  explicit BipartitePureState(ComplexMatrix amplitudes);

  /// The computational basis ket |i>_A |j>_B.
  static BipartitePureState basis(int dim_a, int dim_b, int i, int j);

  int dim_a() const { return static_cast<int>(amplitudes_.rows()); }
  int dim_b() const { return static_cast<int>(amplitudes_.cols()); }
  const ComplexMatrix& amplitudes() const { return amplitudes_; }

  double squared_norm() const { return amplitudes_.squaredNorm(); }
  bool is_normalized(double tol = tolerance::kNormalized) const;
  /// Throws DegenerateInputError for the zero state.
  BipartitePureState normalized() const;

 private:
  ComplexMatrix amplitudes_;
};

/// A Hermitian positive semidefinite matrix, not necessarily of unit trace.
class DensityMatrix {
 public:
  /// Throws InvariantError if the matrix is non-square, non-finite or not
  /// Hermitian within tolerance::kHermitian.
  explicit DensityMatrix(ComplexMatrix matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double trace() const { return matrix_.trace().real(); }
  bool is_normalized(double tol = tolerance::kNormalized) const;

  /// Eigenvalues of matrix / trace, ascending, with roundoff negatives in
  /// [-kEigenClip, 0) clipped to zero. Throws InvariantError for a
  /// non-positive trace or an eigenvalue below -kEigenClip.
  RealVector normalized_eigenvalues() const;

 private:
  ComplexMatrix matrix_;
};

/// Singular values of an amplitude matrix, descending.
struct SchmidtSpectrum {
  std::vector<double> values;

  double squared_sum() const;
  /// Squared values divided by their sum.
  std::vector<double> probabilities() const;
};

/// <x|y> = sum_ij conj(x_ij) y_ij. Throws ShapeError on a dimension mismatch.
Complex inner_product(const BipartitePureState& x, const BipartitePureState& y);

/// Tr_A |s><s|, a d_B x d_B matrix with trace equal to the squared norm of s.
DensityMatrix partial_trace_a(const BipartitePureState& s);
/// Tr_B |s><s|, a d_A x d_A matrix with trace equal to the squared norm of s.
DensityMatrix partial_trace_b(const BipartitePureState& s);

/// Throws NumericError if the decomposition does not produce finite values.
SchmidtSpectrum schmidt(const BipartitePureState& s);

/// -sum p log2 p over the entries, skipping p < kEntropyFloor.
double shannon_entropy(std::span<const double> probabilities);

/// S(rho) = -Tr(rho log2 rho) of rho / Tr(rho).
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy of entanglement of the normalized version of s.
/// Throws DegenerateInputError if the squared norm is at most kZeroNorm.
double entanglement(const BipartitePureState& s);

}  // namespace superbound
