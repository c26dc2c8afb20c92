#pragma once

// Seeded generators of component states and coefficient vectors. Every
// generator is a pure function of the stream it is handed; callers derive a
// distinct substream per draw.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "superbound/coefficients.hpp"
#include "superbound/random.hpp"
#include "superbound/superposition.hpp"

namespace superbound {

/// Largest dim_a * dim_b a generator will produce.
inline constexpr long kMaxStateAmplitudes = 4096;

enum class Family { haar, biorthogonal_blocks, orthogonal_shared_support, product_states, bell_like };
enum class CoefficientMode { constrained, simplex_uniform, fixed };

std::string_view to_string(Family family);
std::string_view to_string(CoefficientMode mode);
/// Both throw std::invalid_argument for unknown names.
Family family_from_string(std::string_view name);
CoefficientMode coefficient_mode_from_string(std::string_view name);

struct EnsembleConfig {
  int n = 2;
  int dim_a = 2;
  int dim_b = 2;
  Family family = Family::haar;
  std::uint64_t seed = 0;
  CoefficientMode coefficient_mode = CoefficientMode::constrained;
  /// Block sizes for biorthogonal_blocks; 0 means dim / n.
  int block_a = 0;
  int block_b = 0;
  /// Coefficients used verbatim in fixed mode.
  std::vector<Complex> fixed_coefficients;

  int effective_block_a() const { return block_a > 0 ? block_a : dim_a / n; }
  int effective_block_b() const { return block_b > 0 ? block_b : dim_b / n; }

  bool operator==(const EnsembleConfig&) const = default;
};

/// Throws DomainError (ranges, size caps) or std::invalid_argument
/// (inconsistent fields).
void validate(const EnsembleConfig& config);

/// Haar-random unitary from the QR decomposition of a complex Ginibre matrix.
ComplexMatrix random_unitary(int dim, RandomStream stream);

/// Independent standard complex Gaussian amplitudes, normalized.
BipartitePureState haar_state(int dim_a, int dim_b, RandomStream stream);
/// |a>|b> with independent Haar factors.
BipartitePureState product_state(int dim_a, int dim_b, RandomStream stream);
/// Maximally entangled state of Schmidt rank min(dim_a, dim_b) under
/// independent Haar local unitaries.
BipartitePureState bell_like_state(int dim_a, int dim_b, RandomStream stream);

/// Component i is Haar-random on the i-th diagonal block
/// [i*block_a, (i+1)*block_a) x [i*block_b, (i+1)*block_b) of an
/// n*block_a x n*block_b system.
std::vector<BipartitePureState> biorthogonal_family(int n, int block_a, int block_b,
                                                    RandomStream stream);
/// Same construction embedded in a dim_a x dim_b system (dim >= n * block).
std::vector<BipartitePureState> biorthogonal_family(int n, int block_a, int block_b, int dim_a,
                                                    int dim_b, RandomStream stream);

/// Mutually orthogonal states that share an A-side (or B-side) factor, so
/// they are not biorthogonal. Falls back to orthonormal columns of a Haar
/// unitary when neither side alone has room for n kets.
/// Throws DomainError if dim_a * dim_b < n.
std::vector<BipartitePureState> orthogonal_not_biorthogonal_family(int n, int dim_a, int dim_b,
                                                                   RandomStream stream);

/// Uniform on the probability simplex (normalized exponentials).
std::vector<double> simplex_weights(int n, RandomStream stream);

/// |alpha_i|^2 = w_i / N_i^2 with uniform phases, so sum_i N_i^2 |alpha_i|^2 = 1.
std::vector<Complex> constrained_coefficients(int n, const NormalizationCoeffs& coeffs,
                                              RandomStream stream);
std::vector<Complex> constrained_coefficients_from_weights(std::span<const double> weights,
                                                           const NormalizationCoeffs& coeffs,
                                                           RandomStream stream);

/// |alpha_i|^2 = w_i with uniform phases, so sum_i |alpha_i|^2 = 1.
std::vector<Complex> simplex_coefficients(int n, RandomStream stream);
std::vector<Complex> simplex_coefficients_from_weights(std::span<const double> weights,
                                                       RandomStream stream);

/// Components of the configured family; validates the config.
std::vector<BipartitePureState> draw_components(const EnsembleConfig& config, RandomStream stream);
std::vector<Complex> draw_coefficients(const EnsembleConfig& config, RandomStream stream);

/// The spec for one trial, drawn from the substream (seed, "trial", trial_id).
SuperpositionSpec draw_spec(const EnsembleConfig& config, std::uint64_t trial_id);

}  // namespace superbound
