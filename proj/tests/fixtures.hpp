#pragma once

#include <cmath>
#include <vector>

#include "superbound/core.hpp"

namespace superbound::fixtures {

inline BipartitePureState ket(int dim_a, int dim_b, int i, int j) {
  return BipartitePureState::basis(dim_a, dim_b, i, j);
}

/// (|00> + sign |11>) / sqrt(2)
inline BipartitePureState bell(double sign = 1.0) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0 / std::sqrt(2.0);
  m(1, 1) = sign / std::sqrt(2.0);
  return BipartitePureState(m);
}

/// (|2k,2k> + |2k+1,2k+1>) / sqrt(2) inside a 4x4 system, k = 0 or 1.
inline BipartitePureState bell_block(int k) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(2 * k, 2 * k) = 1.0 / std::sqrt(2.0);
  m(2 * k + 1, 2 * k + 1) = 1.0 / std::sqrt(2.0);
  return BipartitePureState(m);
}

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace superbound::fixtures
