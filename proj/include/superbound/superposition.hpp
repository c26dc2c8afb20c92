#pragma once

#include <span>
#include <vector>

#include "superbound/core.hpp"

namespace superbound {

/// Matrix of pairwise overlaps <phi_i|phi_j> between normalized components.
class GramMatrix {
 public:
  /// Throws ShapeError if the components disagree on dimensions.
  explicit GramMatrix(std::span<const BipartitePureState> components);

  int size() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  /// Largest |<phi_i|phi_j>| over i != j.
  double max_off_diagonal() const;

 private:
  ComplexMatrix matrix_;
};

/// Coefficients alpha_i paired with normalized components phi_i, describing
/// the (generally unnormalized) state sum_i alpha_i |phi_i>.
class SuperpositionSpec {
 public:
  /// Validates n >= 2, matching lengths, shared dimensions, unit-norm
  /// components (within 1e-10) and finite, not-all-zero coefficients.
  /// Throws InvariantError or ShapeError.
  SuperpositionSpec(std::vector<Complex> coefficients,
                    std::vector<BipartitePureState> components);

  int size() const { return static_cast<int>(coefficients_.size()); }
  int dim_a() const { return components_.front().dim_a(); }
  int dim_b() const { return components_.front().dim_b(); }
  const std::vector<Complex>& coefficients() const { return coefficients_; }
  const std::vector<BipartitePureState>& components() const { return components_; }
  const GramMatrix& gram() const { return gram_; }

  /// sum_i |alpha_i|^2
  double coefficient_weight() const;
  /// Same components, new coefficients.
  SuperpositionSpec with_coefficients(std::vector<Complex> coefficients) const;

 private:
  std::vector<Complex> coefficients_;
  std::vector<BipartitePureState> components_;
  GramMatrix gram_;
};

/// Component norm window accepted by SuperpositionSpec.
inline constexpr double kComponentNormTolerance = 1e-10;

/// Entrywise sum_i alpha_i phi_i; may be unnormalized or zero.
BipartitePureState combine(const SuperpositionSpec& spec);

/// ||sum_i alpha_i phi_i||^2 evaluated through the Gram matrix.
double squared_norm(const SuperpositionSpec& spec);

/// Entanglement of the normalized superposition. Throws DegenerateInputError
/// when the squared norm is at most tolerance::kZeroNorm.
double superposition_entanglement(const SuperpositionSpec& spec);

}  // namespace superbound
