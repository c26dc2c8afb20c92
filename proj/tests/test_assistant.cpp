#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "superbound/assistant.hpp"
#include "superbound/bounds.hpp"
#include "superbound/ensembles.hpp"
#include "superbound/errors.hpp"

namespace superbound {
namespace {

using fixtures::bell;
using fixtures::kInvSqrt2;
using fixtures::ket;

TEST(Assistant, OppositeBellComponents) {
  const SuperpositionSpec spec({kInvSqrt2, kInvSqrt2}, {bell(+1), bell(-1)});
  const auto r = assistant_state_check(spec);
  EXPECT_NEAR(r.s_rho_b, 1.0, 1e-12);
  EXPECT_LT(r.norm_partition_residual, 1e-12);
  EXPECT_LT(r.rho_b_residual, 1e-12);
  // C_1 = (phi_1 + phi_2) / 2 = |00> / sqrt(2)
  EXPECT_NEAR(r.leading_weight, 0.5, 1e-12);
  EXPECT_NEAR(r.leading_entanglement, 0.0, 1e-12);
  ASSERT_EQ(r.residual_weights.size(), 1u);
  EXPECT_NEAR(r.residual_weights[0], 0.5, 1e-12);
  EXPECT_NEAR(r.lower_chain, 0.0, 1e-12);
  EXPECT_NEAR(r.upper_chain, 2.0, 1e-12);
  EXPECT_TRUE(r.all_ok());
}

TEST(Assistant, IdenticalComponentsCollapseIntoLeadingTerm) {
  const auto phi = bell();
  const SuperpositionSpec spec({0.6, 0.8}, {phi, phi});
  const auto r = assistant_state_check(spec);
  // rho_B is the reduced state of phi itself
  EXPECT_NEAR(r.s_rho_b, 1.0, 1e-12);
  EXPECT_NEAR(r.leading_weight, std::pow(0.6 + 0.8, 2) / 2.0, 1e-12);
  EXPECT_NEAR(r.leading_entanglement, 1.0, 1e-12);
  EXPECT_NEAR(r.lower_chain, 1.0, 1e-12);
  EXPECT_TRUE(r.all_ok());
}

TEST(Assistant, ChainsHoldOnRandomSpecs) {
  for (int n : {2, 3, 5, 8}) {
    EnsembleConfig cfg{.n = n, .dim_a = 2, .dim_b = 3, .seed = 51,
                       .coefficient_mode = CoefficientMode::simplex_uniform};
    for (std::uint64_t t = 0; t < 50; ++t) {
      const auto r = assistant_state_check(draw_spec(cfg, t));
      EXPECT_TRUE(r.all_ok()) << "n=" << n << " trial " << t;
      EXPECT_LT(r.rho_b_residual, 1e-10);
      EXPECT_LE(r.lower_chain, r.s_rho_b + 1e-9);
      EXPECT_LE(r.s_rho_b, r.upper_chain + 1e-9);
    }
  }
}

TEST(Assistant, RejectsUnnormalizedAndOversized) {
  const auto phi = ket(2, 2, 0, 0);
  EXPECT_THROW(assistant_state_check(SuperpositionSpec({0.5, 0.5}, {phi, bell()})),
               PreconditionError);
  std::vector<BipartitePureState> comps(9, phi);
  EXPECT_THROW(assistant_state_check(SuperpositionSpec(std::vector<Complex>(9, 1.0 / 3.0), comps)),
               DomainError);
}

}  // namespace
}  // namespace superbound
