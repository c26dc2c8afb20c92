#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "superbound/bounds.hpp"
#include "superbound/ensembles.hpp"
#include "superbound/errors.hpp"

namespace superbound {
namespace {

using fixtures::bell;
using fixtures::kInvSqrt2;
using fixtures::ket;

TEST(BoundConstrained, OrthogonalProductComponents) {
  const SuperpositionSpec spec({0.5, 0.5}, {ket(2, 2, 0, 0), ket(2, 2, 1, 1)});
  const auto r = bound_constrained(spec);
  EXPECT_EQ(r.variant, BoundVariant::constrained);
  EXPECT_NEAR(r.lhs, 0.5, 1e-12);
  EXPECT_NEAR(r.rhs, 1.0, 1e-12);
  EXPECT_NEAR(r.gap, 0.5, 1e-12);
  EXPECT_NEAR(r.correction, 1.0, 1e-12);
  EXPECT_FALSE(r.permutation.has_value());
}

TEST(BoundConstrained, IdenticalBellComponents) {
  const SuperpositionSpec spec({0.5, 0.5}, {bell(), bell()});
  const auto r = bound_constrained(spec);
  EXPECT_NEAR(r.lhs, 1.0, 1e-12);
  EXPECT_NEAR(r.rhs, 2.0, 1e-12);
  EXPECT_EQ(r.component_entanglements.size(), 2u);
}

TEST(BoundConstrained, Errors) {
  EXPECT_THROW(bound_constrained(SuperpositionSpec({kInvSqrt2, kInvSqrt2}, {bell(), bell(-1)})),
               PreconditionError);
  const auto phi = ket(2, 2, 0, 0);
  EXPECT_THROW(bound_constrained(SuperpositionSpec({0.5, -0.5}, {phi, phi})),
               DegenerateInputError);
  std::vector<BipartitePureState> many(12, phi);
  std::vector<Complex> alphas(12, 0.1);
  EXPECT_THROW(bound_constrained(SuperpositionSpec(alphas, many)), DomainError);
  EXPECT_THROW(bound_unconstrained(SuperpositionSpec(alphas, many)), DomainError);
}

TEST(BoundConstrained, HoldsOnRandomThreeComponentSpecs) {
  EnsembleConfig cfg{.n = 3, .dim_a = 3, .dim_b = 3, .seed = 31};
  for (std::uint64_t t = 0; t < 300; ++t) {
    const auto r = bound_constrained(draw_spec(cfg, t));
    EXPECT_GE(r.gap, -1e-9);
    EXPECT_GE(r.lhs, 0.0);
    EXPECT_NEAR(r.gap, r.rhs - r.lhs, 0.0);
  }
}

TEST(BoundConstrained, TwoComponentsReduceToEqualWeightForm) {
  EnsembleConfig cfg{.n = 2, .dim_a = 3, .dim_b = 2, .seed = 32};
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto spec = draw_spec(cfg, t);
    const auto r = bound_constrained(spec);
    const double a1 = std::norm(spec.coefficients()[0]);
    const double a2 = std::norm(spec.coefficients()[1]);
    const double e1 = entanglement(spec.components()[0]);
    const double e2 = entanglement(spec.components()[1]);
    const double h = oracle::shannon_bits({2 * a1, 2 * a2});
    EXPECT_NEAR(r.rhs, 2 * a1 * e1 + 2 * a2 * e2 + h, 1e-12);
  }
}

TEST(BoundUnconstrained, AgreesWithConstrainedUnderConstraint) {
  EnsembleConfig cfg{.n = 4, .dim_a = 2, .dim_b = 4, .seed = 33};
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto spec = draw_spec(cfg, t);
    const auto c = bound_constrained(spec);
    const auto u = bound_unconstrained(spec);
    EXPECT_NEAR(u.lhs, c.lhs, 1e-10);
    EXPECT_NEAR(u.rhs, c.rhs, 1e-10);
    EXPECT_NEAR(u.correction, c.correction, 1e-10);
  }
}

TEST(BoundUnconstrained, BellSumIntroExample) {
  const SuperpositionSpec spec({kInvSqrt2, kInvSqrt2}, {bell(+1), bell(-1)});
  const auto r = bound_unconstrained(spec);
  EXPECT_NEAR(r.superposition_entanglement, 0.0, 1e-12);
  EXPECT_NEAR(r.lhs, 0.0, 1e-12);
  // p = (1, 1): -sum p log p = 0, plus 2 log2 2
  EXPECT_NEAR(r.correction, 2.0, 1e-12);
  EXPECT_NEAR(r.rhs, 4.0, 1e-12);
  EXPECT_GE(r.gap, -1e-9);
}

TEST(BoundUnconstrained, HoldsAtArbitraryCoefficientScale) {
  EnsembleConfig cfg{.n = 4, .dim_a = 3, .dim_b = 3, .seed = 34,
                     .coefficient_mode = CoefficientMode::simplex_uniform};
  RandomStream scales(35);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto spec = draw_spec(cfg, t);
    std::vector<Complex> scaled = spec.coefficients();
    const double s = std::exp(6.0 * (scales.uniform() - 0.5));
    for (auto& a : scaled) a *= s;
    const auto base = bound_unconstrained(spec);
    const auto r = bound_unconstrained(spec.with_coefficients(scaled));
    EXPECT_GE(r.gap, -1e-9);
    // both sides scale by s^2
    EXPECT_NEAR(r.lhs, s * s * base.lhs, 1e-9 * (1 + r.lhs));
    EXPECT_NEAR(r.rhs, s * s * base.rhs, 1e-9 * (1 + r.rhs));
  }
}

TEST(BoundMinimized, TwoComponentsKeepIdentity) {
  const SuperpositionSpec spec({0.5, 0.5}, {ket(2, 2, 0, 0), bell()});
  const auto r = bound_minimized(spec);
  ASSERT_TRUE(r.permutation.has_value());
  EXPECT_EQ(*r.permutation, (std::vector<int>{0, 1}));
  EXPECT_EQ(r.rhs, bound_unconstrained(spec).rhs);
}

TEST(BoundMinimized, NoWorseThanIdentityOrder) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = m(1, 1) = 1.0 / std::sqrt(2.0);
  const SuperpositionSpec spec({0.4, 0.3, 0.2},
                               {ket(3, 3, 0, 0), ket(3, 3, 2, 1), BipartitePureState(m)});
  const auto r = bound_minimized(spec);
  EXPECT_EQ(r.component_entanglements, (std::vector<double>{0.0, 0.0, 1.0}));
  EXPECT_LE(r.rhs, bound_unconstrained(spec).rhs);
  EXPECT_GE(r.gap, -1e-9);
}

TEST(BoundMinimized, MatchesPermutationEnumerationOracle) {
  EnsembleConfig cfg{.n = 4, .dim_a = 3, .dim_b = 3, .seed = 36,
                     .coefficient_mode = CoefficientMode::simplex_uniform};
  const auto n2 = normalization_coeffs(4).n_squared;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto spec = draw_spec(cfg, t);
    const auto r = bound_minimized(spec);
    const auto expected =
        oracle::minimize_over_permutations(spec.coefficients(), n2, r.component_entanglements);
    EXPECT_NEAR(r.rhs, expected.rhs, 1e-12);
    EXPECT_TRUE(std::binary_search(expected.argmins.begin(), expected.argmins.end(),
                                   *r.permutation));
    EXPECT_LE(r.rhs, bound_unconstrained(spec).rhs + 1e-12);
    EXPECT_GE(r.gap, -1e-9);
  }
}

TEST(BoundMinimized, ArgminSurvivesCommonScaling) {
  EnsembleConfig cfg{.n = 5, .dim_a = 2, .dim_b = 3, .seed = 37,
                     .coefficient_mode = CoefficientMode::simplex_uniform};
  const auto n2 = normalization_coeffs(5).n_squared;
  for (std::uint64_t t = 0; t < 30; ++t) {
    const auto spec = draw_spec(cfg, t);
    std::vector<Complex> scaled = spec.coefficients();
    for (auto& a : scaled) a *= Complex(0.0, 4.0);
    const auto r = bound_minimized(spec.with_coefficients(scaled));
    auto e = r.component_entanglements;
    const auto base = oracle::minimize_over_permutations(spec.coefficients(), n2, e);
    EXPECT_TRUE(std::binary_search(base.argmins.begin(), base.argmins.end(), *r.permutation));
  }
}

TEST(BoundMinimized, RefusesLargeN) {
  std::vector<BipartitePureState> comps(9, ket(2, 2, 0, 0));
  EXPECT_THROW(bound_minimized(SuperpositionSpec(std::vector<Complex>(9, 0.1), comps)),
               DomainError);
}

TEST(BoundVariants, HoldAcrossFamilies) {
  for (Family family : {Family::haar, Family::product_states, Family::bell_like,
                        Family::orthogonal_shared_support}) {
    for (int n = 2; n <= 5; ++n) {
      EnsembleConfig cfg{.n = n, .dim_a = 3, .dim_b = 4, .family = family, .seed = 38};
      for (std::uint64_t t = 0; t < 40; ++t) {
        const auto spec = draw_spec(cfg, t);
        for (BoundVariant v :
             {BoundVariant::constrained, BoundVariant::unconstrained, BoundVariant::minimized}) {
          const auto r = evaluate_bound(spec, v);
          EXPECT_GE(r.gap, -1e-9) << to_string(family) << " n=" << n << " " << to_string(v);
        }
      }
    }
  }
}

TEST(BoundVariant, NamesRoundTrip) {
  for (BoundVariant v :
       {BoundVariant::constrained, BoundVariant::unconstrained, BoundVariant::minimized}) {
    EXPECT_EQ(bound_variant_from_string(to_string(v)), v);
  }
  EXPECT_THROW(bound_variant_from_string("tight"), std::invalid_argument);
}

}  // namespace
}  // namespace superbound
