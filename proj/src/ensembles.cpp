#include "superbound/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "superbound/biorthogonal.hpp"
#include "superbound/errors.hpp"

namespace superbound {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::haar:
      return "haar";
    case Family::biorthogonal_blocks:
      return "biorthogonal_blocks";
    case Family::orthogonal_shared_support:
      return "orthogonal_shared_support";
    case Family::product_states:
      return "product_states";
    case Family::bell_like:
      return "bell_like";
  }
  return "unknown";
}

std::string_view to_string(CoefficientMode mode) {
  switch (mode) {
    case CoefficientMode::constrained:
      return "constrained";
    case CoefficientMode::simplex_uniform:
      return "simplex_uniform";
    case CoefficientMode::fixed:
      return "fixed";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::haar, Family::biorthogonal_blocks, Family::orthogonal_shared_support,
                   Family::product_states, Family::bell_like}) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

CoefficientMode coefficient_mode_from_string(std::string_view name) {
  for (CoefficientMode m :
       {CoefficientMode::constrained, CoefficientMode::simplex_uniform, CoefficientMode::fixed}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown coefficient mode '" + std::string(name) + "'");
}

namespace {

void require_dims(int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1) throw DomainError("dimensions must be positive");
  if (static_cast<long>(dim_a) * dim_b > kMaxStateAmplitudes) {
    throw DomainError("state size " + std::to_string(dim_a) + "x" + std::to_string(dim_b) +
                      " exceeds " + std::to_string(kMaxStateAmplitudes) + " amplitudes");
  }
}

ComplexVector gaussian_vector(int dim, RandomStream& stream) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = stream.complex_normal();
  return v;
}

std::vector<Complex> with_phases(std::span<const double> moduli_squared, RandomStream& stream) {
  std::vector<Complex> out;
  out.reserve(moduli_squared.size());
  for (double m2 : moduli_squared) out.push_back(std::sqrt(m2) * stream.phase());
  return out;
}

}  // namespace

void validate(const EnsembleConfig& config) {
  if (config.n < kMinComponents || config.n > kMaxBoundComponents) {
    throw DomainError("ensemble n must lie in [" + std::to_string(kMinComponents) + ", " +
                      std::to_string(kMaxBoundComponents) + "]");
  }
  require_dims(config.dim_a, config.dim_b);
  if (config.block_a < 0 || config.block_b < 0) throw DomainError("block sizes must be non-negative");
  if (config.family == Family::biorthogonal_blocks) {
    const int ba = config.effective_block_a();
    const int bb = config.effective_block_b();
    if (ba < 1 || bb < 1 || config.dim_a < config.n * ba || config.dim_b < config.n * bb) {
      throw DomainError("biorthogonal_blocks needs dim_a >= n*block_a and dim_b >= n*block_b");
    }
  }
  if (config.family == Family::orthogonal_shared_support &&
      static_cast<long>(config.dim_a) * config.dim_b < config.n) {
    throw DomainError("orthogonal family needs dim_a * dim_b >= n");
  }
  if (config.coefficient_mode == CoefficientMode::fixed &&
      static_cast<int>(config.fixed_coefficients.size()) != config.n) {
    throw std::invalid_argument("fixed coefficient mode needs exactly n coefficients");
  }
}

ComplexMatrix random_unitary(int dim, RandomStream stream) {
  ComplexMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = stream.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  // Fix the phase of R's diagonal so Q is Haar distributed.
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

BipartitePureState haar_state(int dim_a, int dim_b, RandomStream stream) {
  require_dims(dim_a, dim_b);
  ComplexMatrix m(dim_a, dim_b);
  for (int i = 0; i < dim_a; ++i) {
    for (int j = 0; j < dim_b; ++j) m(i, j) = stream.complex_normal();
  }
  return BipartitePureState(m / m.norm());
}

BipartitePureState product_state(int dim_a, int dim_b, RandomStream stream) {
  require_dims(dim_a, dim_b);
  ComplexVector a = gaussian_vector(dim_a, stream);
  ComplexVector b = gaussian_vector(dim_b, stream);
  a /= a.norm();
  b /= b.norm();
  return BipartitePureState(a * b.transpose());
}

BipartitePureState bell_like_state(int dim_a, int dim_b, RandomStream stream) {
  require_dims(dim_a, dim_b);
  const int rank = std::min(dim_a, dim_b);
  ComplexMatrix m = ComplexMatrix::Zero(dim_a, dim_b);
  for (int k = 0; k < rank; ++k) m(k, k) = 1.0 / std::sqrt(static_cast<double>(rank));
  const ComplexMatrix ua = random_unitary(dim_a, stream.substream("local-a"));
  const ComplexMatrix ub = random_unitary(dim_b, stream.substream("local-b"));
  return BipartitePureState(ua * m * ub.transpose());
}

std::vector<BipartitePureState> biorthogonal_family(int n, int block_a, int block_b,
                                                    RandomStream stream) {
  return biorthogonal_family(n, block_a, block_b, n * block_a, n * block_b, stream);
}

std::vector<BipartitePureState> biorthogonal_family(int n, int block_a, int block_b, int dim_a,
                                                    int dim_b, RandomStream stream) {
  if (n < 1 || block_a < 1 || block_b < 1) throw DomainError("block family needs n, blocks >= 1");
  require_dims(dim_a, dim_b);
  if (dim_a < n * block_a || dim_b < n * block_b) {
    throw DomainError("blocks do not fit in a " + std::to_string(dim_a) + "x" +
                      std::to_string(dim_b) + " system");
  }
  std::vector<BipartitePureState> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto block = haar_state(block_a, block_b, stream.substream(static_cast<std::uint64_t>(i)));
    ComplexMatrix m = ComplexMatrix::Zero(dim_a, dim_b);
    m.block(i * block_a, i * block_b, block_a, block_b) = block.amplitudes();
    out.emplace_back(std::move(m));
  }
  return out;
}

std::vector<BipartitePureState> orthogonal_not_biorthogonal_family(int n, int dim_a, int dim_b,
                                                                   RandomStream stream) {
  require_dims(dim_a, dim_b);
  if (n < 2 || static_cast<long>(dim_a) * dim_b < n) {
    throw DomainError("need n >= 2 and dim_a * dim_b >= n for " + std::to_string(n) +
                      " orthogonal states");
  }
  std::vector<BipartitePureState> out;
  out.reserve(n);
  if (dim_b >= n || dim_a >= n) {
    const bool shared_a = dim_b >= n;
    const int shared_dim = shared_a ? dim_a : dim_b;
    const int basis_dim = shared_a ? dim_b : dim_a;
    RandomStream shared_stream = stream.substream("shared");
    ComplexVector shared = gaussian_vector(shared_dim, shared_stream);
    shared /= shared.norm();
    const ComplexMatrix u = random_unitary(basis_dim, stream.substream("basis"));
    for (int i = 0; i < n; ++i) {
      if (shared_a) {
        out.emplace_back(ComplexMatrix(shared * u.col(i).transpose()));
      } else {
        out.emplace_back(ComplexMatrix(u.col(i) * shared.transpose()));
      }
    }
  } else {
    const ComplexMatrix u = random_unitary(dim_a * dim_b, stream.substream("joint"));
    for (int i = 0; i < n; ++i) {
      ComplexMatrix m(dim_a, dim_b);
      for (int a = 0; a < dim_a; ++a) {
        for (int b = 0; b < dim_b; ++b) m(a, b) = u(a * dim_b + b, i);
      }
      out.emplace_back(std::move(m));
    }
    if (is_biorthogonal(out)) {
      throw NumericError("orthogonal draw happened to be biorthogonal");
    }
  }
  return out;
}

std::vector<double> simplex_weights(int n, RandomStream stream) {
  std::vector<double> w(n);
  for (double& x : w) x = stream.exponential();
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

std::vector<Complex> constrained_coefficients(int n, const NormalizationCoeffs& coeffs,
                                              RandomStream stream) {
  const auto w = simplex_weights(n, stream.substream("weights"));
  return constrained_coefficients_from_weights(w, coeffs, stream.substream("phases"));
}

std::vector<Complex> constrained_coefficients_from_weights(std::span<const double> weights,
                                                           const NormalizationCoeffs& coeffs,
                                                           RandomStream stream) {
  if (static_cast<int>(weights.size()) != coeffs.n) {
    throw ShapeError("weight count does not match the normalization coefficients");
  }
  std::vector<double> moduli(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    moduli[i] = weights[i] / coeffs.n_squared[i];
  }
  return with_phases(moduli, stream);
}

std::vector<Complex> simplex_coefficients(int n, RandomStream stream) {
  const auto w = simplex_weights(n, stream.substream("weights"));
  return simplex_coefficients_from_weights(w, stream.substream("phases"));
}

std::vector<Complex> simplex_coefficients_from_weights(std::span<const double> weights,
                                                       RandomStream stream) {
  return with_phases(weights, stream);
}

std::vector<BipartitePureState> draw_components(const EnsembleConfig& config, RandomStream stream) {
  validate(config);
  const int n = config.n;
  switch (config.family) {
    case Family::biorthogonal_blocks:
      return biorthogonal_family(n, config.effective_block_a(), config.effective_block_b(),
                                 config.dim_a, config.dim_b, stream);
    case Family::orthogonal_shared_support:
      return orthogonal_not_biorthogonal_family(n, config.dim_a, config.dim_b, stream);
    case Family::haar:
    case Family::product_states:
    case Family::bell_like:
      break;
  }
  std::vector<BipartitePureState> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    RandomStream s = stream.substream(static_cast<std::uint64_t>(i));
    if (config.family == Family::haar) {
      out.push_back(haar_state(config.dim_a, config.dim_b, s));
    } else if (config.family == Family::product_states) {
      out.push_back(product_state(config.dim_a, config.dim_b, s));
    } else {
      out.push_back(bell_like_state(config.dim_a, config.dim_b, s));
    }
  }
  return out;
}

std::vector<Complex> draw_coefficients(const EnsembleConfig& config, RandomStream stream) {
  validate(config);
  switch (config.coefficient_mode) {
    case CoefficientMode::constrained:
      return constrained_coefficients(config.n, normalization_coeffs(config.n), stream);
    case CoefficientMode::simplex_uniform:
      return simplex_coefficients(config.n, stream);
    case CoefficientMode::fixed:
      return config.fixed_coefficients;
  }
  throw std::invalid_argument("unknown coefficient mode");
}

SuperpositionSpec draw_spec(const EnsembleConfig& config, std::uint64_t trial_id) {
  const RandomStream trial = RandomStream(config.seed).substream("trial").substream(trial_id);
  return SuperpositionSpec(draw_coefficients(config, trial.substream("coefficients")),
                           draw_components(config, trial.substream("components")));
}

}  // namespace superbound
