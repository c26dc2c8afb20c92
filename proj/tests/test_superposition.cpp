#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "superbound/ensembles.hpp"
#include "superbound/errors.hpp"
#include "superbound/superposition.hpp"

namespace superbound {
namespace {

using fixtures::bell;
using fixtures::kInvSqrt2;
using fixtures::ket;

TEST(Combine, BellPairSumIsUnentangled) {
  const SuperpositionSpec spec({kInvSqrt2, kInvSqrt2}, {bell(+1.0), bell(-1.0)});
  const auto psi = combine(spec);
  EXPECT_NEAR(std::abs(psi.amplitudes()(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(psi.amplitudes().cwiseAbs().sum(), 1.0, 1e-15);
  EXPECT_NEAR(superposition_entanglement(spec), 0.0, 1e-12);
}

TEST(Combine, ZeroCoefficientSelectsComponent) {
  const auto phi = haar_state(2, 3, RandomStream(3));
  const SuperpositionSpec spec({1.0, 0.0}, {phi, haar_state(2, 3, RandomStream(4))});
  EXPECT_LT((combine(spec).amplitudes() - phi.amplitudes()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Combine, MayVanish) {
  const auto phi = ket(2, 2, 0, 0);
  const SuperpositionSpec spec({1.0, -1.0}, {phi, phi});
  EXPECT_EQ(combine(spec).squared_norm(), 0.0);
  EXPECT_THROW(superposition_entanglement(spec), DegenerateInputError);
}

TEST(SquaredNorm, OrthogonalAndIdenticalComponents) {
  const SuperpositionSpec orth({0.5, 0.5}, {ket(2, 2, 0, 0), ket(2, 2, 1, 1)});
  EXPECT_NEAR(squared_norm(orth), 0.5, 1e-15);
  EXPECT_NEAR(combine(orth).squared_norm(), 0.5, 1e-15);
  EXPECT_NEAR(superposition_entanglement(orth), 1.0, 1e-12);

  const SuperpositionSpec same({0.5, 0.5}, {ket(2, 2, 0, 0), ket(2, 2, 0, 0)});
  EXPECT_NEAR(squared_norm(same), 1.0, 1e-15);
}

TEST(SquaredNorm, GramRouteMatchesDirectNorm) {
  RandomStream root(21);
  for (std::uint64_t t = 0; t < 200; ++t) {
    EnsembleConfig cfg;
    cfg.n = 2 + static_cast<int>(t % 5);
    cfg.dim_a = 2 + static_cast<int>(t % 3);
    cfg.dim_b = 3;
    cfg.seed = t;
    cfg.coefficient_mode = CoefficientMode::simplex_uniform;
    const auto spec = draw_spec(cfg, t);
    EXPECT_NEAR(squared_norm(spec), combine(spec).squared_norm(), 1e-10);
  }
}

TEST(SquaredNorm, OrthogonalFamilyEqualsCoefficientWeight) {
  RandomStream root(22);
  for (std::uint64_t t = 0; t < 50; ++t) {
    const auto comps = orthogonal_not_biorthogonal_family(3, 2, 3, root.substream(t));
    std::vector<Complex> alpha{Complex(0.3, 1.1), Complex(-2.0, 0.4), Complex(0.0, 0.7)};
    const SuperpositionSpec spec(alpha, comps);
    EXPECT_NEAR(squared_norm(spec), spec.coefficient_weight(), 1e-10);
  }
}

TEST(SuperpositionEntanglement, InvariantUnderCommonScaling) {
  RandomStream root(23);
  for (std::uint64_t t = 0; t < 50; ++t) {
    EnsembleConfig cfg{.n = 3, .dim_a = 3, .dim_b = 3, .seed = t,
                       .coefficient_mode = CoefficientMode::simplex_uniform};
    const auto spec = draw_spec(cfg, 0);
    const Complex factor = std::polar(0.01 + 5.0 * root.substream(t).uniform(), 1.3);
    std::vector<Complex> scaled = spec.coefficients();
    for (auto& a : scaled) a *= factor;
    EXPECT_NEAR(superposition_entanglement(spec.with_coefficients(scaled)),
                superposition_entanglement(spec), 1e-9);
  }
}

TEST(SuperpositionEntanglement, TwoBellBlocks) {
  const SuperpositionSpec spec({kInvSqrt2, kInvSqrt2},
                               {fixtures::bell_block(0), fixtures::bell_block(1)});
  // Schmidt values of the combined state are four copies of 1/2.
  const auto values = schmidt(combine(spec)).values;
  for (double v : values) EXPECT_NEAR(v, 0.5, 1e-15);
  EXPECT_NEAR(superposition_entanglement(spec), 2.0, 1e-12);
}

TEST(GramMatrix, StructureOnRandomSpecs) {
  EnsembleConfig cfg{.n = 4, .dim_a = 2, .dim_b = 3, .seed = 5};
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto spec = draw_spec(cfg, t);
    const auto& g = spec.gram().matrix();
    EXPECT_LT((g - g.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(g(i, i).real(), 1.0, 1e-10);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(g);
    EXPECT_GE(solver.eigenvalues().minCoeff(), -1e-10);
  }
}

TEST(SuperpositionSpec, ValidatesInvariants) {
  const auto a = ket(2, 2, 0, 0);
  EXPECT_THROW(SuperpositionSpec({1.0}, {a}), InvariantError);
  EXPECT_THROW(SuperpositionSpec({1.0, 1.0}, {a}), ShapeError);
  EXPECT_THROW(SuperpositionSpec({1.0, 1.0}, {a, ket(2, 3, 0, 0)}), ShapeError);
  EXPECT_THROW(SuperpositionSpec({0.0, 0.0}, {a, a}), InvariantError);
  EXPECT_THROW(SuperpositionSpec({1.0, std::nan("")}, {a, a}), InvariantError);
  EXPECT_THROW(SuperpositionSpec({1.0, 1.0}, {a, BipartitePureState(2.0 * a.amplitudes())}),
               InvariantError);
}

}  // namespace
}  // namespace superbound
