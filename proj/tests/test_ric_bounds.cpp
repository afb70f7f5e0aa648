#include "riclab/ric_bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "riclab/constants.hpp"
#include "riclab/rng.hpp"

namespace {

using riclab::GrowthPoint;
using riclab::RateModel;
using riclab::RicPair;
using riclab::Route;

TEST(ConditionRatios, GammaAndKappaMatchHandComputation) {
  const RicPair ric{0.2, 0.3};
  const auto g = riclab::gamma_of(ric);
  ASSERT_TRUE(g.has_value());
  EXPECT_NEAR(*g, 1.3 / 0.8, 1e-15);
  const auto k = riclab::srsr_kappa(ric);
  ASSERT_TRUE(k.has_value());
  const double b = 0.5 / (2.0 * std::sqrt(0.8 * 1.3));
  EXPECT_NEAR(*k, 4.0 * b / (4.0 - b), 1e-15);
}

TEST(ConditionRatios, KappaEqualsOneExactlyAtTheCriticalPair) {
  const double tau = riclab::tau_zero();
  const auto k = riclab::srsr_kappa({tau, tau});
  ASSERT_TRUE(k.has_value());
  EXPECT_NEAR(*k, 1.0, 1e-12);
}

TEST(ConditionRatios, KappaBelowOneIffGammaBelowCritical) {
  // kappa may be undefined (b >= 4) deep inside the failing region; in
  // that case the gamma side must fail too.
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 20; ++j) {
      const double cmin = 0.999 * i / 10.0;
      const double cmax = 3.0 * j / 20.0;
      const RicPair ric{cmin, cmax};
      const auto g = riclab::gamma_of(ric);
      const auto k = riclab::srsr_kappa(ric);
      ASSERT_TRUE(g.has_value());
      const bool kappa_ok = k.has_value() && *k < 1.0;
      EXPECT_EQ(kappa_ok, *g < riclab::gamma_zero())
          << "cmin=" << cmin << " cmax=" << cmax;
    }
  }
}

TEST(ConditionRatios, DegenerateInputsYieldNoValue) {
  EXPECT_FALSE(riclab::gamma_of({1.0, 0.5}).has_value());
  EXPECT_FALSE(riclab::srsr_kappa({1.0, 0.5}).has_value());
  EXPECT_THROW((void)riclab::gamma_of({-0.1, 0.5}), std::domain_error);
}

TEST(PsiBounds, MatchFrozenValuesAtHeadlinePoint) {
  const GrowthPoint point(0.5, 0.04);
  const auto eig = riclab::psi_bounds_eigen(RateModel::ds(), point);
  ASSERT_TRUE(eig.has_value());
  EXPECT_NEAR(eig->t0, 0.626223964024795143777365, 1e-12);
  EXPECT_NEAR(eig->psi_min, 0.986223964024795143777365, 1e-12);
  EXPECT_NEAR(eig->psi_max, 1.066223964024795143777365, 1e-12);
  EXPECT_TRUE(eig->admissible());

  const auto sng = riclab::psi_bounds_singular(RateModel::ds(), point);
  ASSERT_TRUE(sng.has_value());
  EXPECT_NEAR(sng->psi_min, 0.9698018893207443075947463, 1e-12);
  EXPECT_NEAR(sng->psi_max, 2.335093966778436267514714, 1e-12);
}

TEST(PsiBounds, EigenRouteGapIsExactlyTwiceRhobar) {
  riclab::Rng rng(424242);
  for (int i = 0; i < 20; ++i) {
    const double rb = 0.001 + 0.12 * rng.uniform();
    const double dl = 0.05 + 0.9 * rng.uniform();
    const auto rep = riclab::psi_bounds_eigen(RateModel::ds(),
                                              GrowthPoint(dl, rb));
    ASSERT_TRUE(rep.has_value());
    EXPECT_NEAR(rep->psi_max - rep->psi_min, 2.0 * rb, 1e-13);
  }
}

TEST(PsiBounds, SingularRouteCapsPsiMinAtOne) {
  // With the fs model t0 is astronomically large, so the lower bound
  // saturates at its cap of one.
  const auto rep = riclab::psi_bounds_singular(RateModel::fs(),
                                               GrowthPoint(0.5, 0.04));
  ASSERT_TRUE(rep.has_value());
  EXPECT_DOUBLE_EQ(rep->psi_min, 1.0);
}

TEST(ThresholdCurve, SingularRouteWithDsModelEqualsClosedForm) {
  riclab::Rng rng(737373);
  const double rho0 = riclab::rho_zero();
  for (int i = 0; i < 1000; ++i) {
    const double rho = rho0 * (1e-3 + (1.0 - 2e-3) * rng.uniform());
    const double lhs = riclab::psi0(Route::singular, rho, RateModel::ds());
    const double rhs = riclab::gaussian_srsr_curve(rho);
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(rhs, 1e-300)) << "rho=" << rho;
  }
}

TEST(ThresholdCurve, MatchesFrozenValues) {
  EXPECT_NEAR(riclab::gaussian_srsr_curve(0.001),
              9.181162959964826247598827e-8, 2e-9 * 9.18e-8);
  EXPECT_NEAR(riclab::gaussian_srsr_curve_log(0.001),
              -16.20352686325168931259491, 1e-10);
  EXPECT_NEAR(riclab::gaussian_srsr_curve_log(1e-4),
              -273.7972192413584226534381, 1e-9);
}

TEST(ThresholdCurve, ApproachesTheEndpointLimit) {
  const double rho0 = riclab::rho_zero();
  EXPECT_NEAR(riclab::gaussian_srsr_curve(rho0 * (1.0 - 1e-9)),
              22.09134772697203033717687, 1e-6);
  // e/(2 rho0) is the exact limit from below.
  EXPECT_NEAR(std::exp(1.0) / (2.0 * rho0), 22.09134770488068261296626,
              1e-12);
}

TEST(ThresholdCurve, CrossesOneInsideTheExpectedBracket) {
  // Bisection on the log curve localizes the delta = 1 crossing.
  double lo = 1e-3;
  double hi = 1e-2;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (riclab::gaussian_srsr_curve_log(mid) < 0.0 ? lo : hi) = mid;
  }
  EXPECT_NEAR(lo, 0.003047812810374140268450663, 1e-10 * lo);
  EXPECT_GT(lo, 0.0028);
  EXPECT_LT(lo, 0.0033);
}

TEST(SmallRhoConditions, MatchFrozenValuesAndDominateTheCurve) {
  EXPECT_NEAR(riclab::small_rho_conditions_log(1e-4, RateModel::ds()),
              -299.1011858197576899355051, 1e-9);
  EXPECT_NEAR(riclab::small_rho_conditions_log(1e-4, RateModel::ds()) /
                  riclab::gaussian_srsr_curve_log(1e-4),
              1.092418639782068970395534, 1e-9);
  for (const double rho : {1e-4, 1e-5, 1e-6}) {
    EXPECT_LT(riclab::small_rho_conditions_log(rho, RateModel::ds()),
              riclab::gaussian_srsr_curve_log(rho));
  }
  EXPECT_THROW(
      (void)riclab::small_rho_conditions_log(1e-4, RateModel::tw()),
      std::invalid_argument);
}

TEST(RegimeAsymptotics, DsAgreesWithExactBoundAtTinyRhobar) {
  const auto exact = riclab::psi_bounds_singular(RateModel::ds(),
                                                 GrowthPoint(0.5, 1e-6));
  ASSERT_TRUE(exact.has_value());
  const double asym = riclab::regime_a_psi_max(1e-6, 0.5, RateModel::ds());
  EXPECT_NEAR(exact->psi_max, 0.01318179410634241259030059, 1e-12);
  EXPECT_NEAR(asym, 0.01315725172687508115018107, 1e-12);
  EXPECT_LT(std::abs(asym - exact->psi_max) / exact->psi_max, 0.10);
}

TEST(RegimeAsymptotics, LrAndFsMatchFrozenValues) {
  EXPECT_NEAR(riclab::regime_a_psi_max(1e-6, 0.5, RateModel::lr()),
              0.01750865773852421941352518, 1e-12);
  const double fs_log =
      std::log(riclab::regime_a_psi_max(1e-6, 0.5, RateModel::fs()));
  EXPECT_NEAR(fs_log, 505.1471715256682153054288, 1e-9 * fs_log);
  EXPECT_THROW((void)riclab::regime_a_psi_max(1e-6, 0.5, RateModel::tw()),
               std::invalid_argument);
}

TEST(SecondOrderExponent, MatchesFrozenValueAndRejectsBadEps) {
  const auto d2 = riclab::d2_exponent(RateModel::ds(), 0.04, 0.5, 0.1);
  ASSERT_TRUE(d2.has_value());
  EXPECT_NEAR(*d2, 0.03381119820123975718886825, 1e-15);
  EXPECT_THROW((void)riclab::d2_exponent(RateModel::ds(), 0.04, 0.5, 0.0),
               std::domain_error);
  EXPECT_THROW((void)riclab::d2_exponent(RateModel::ds(), 0.04, 0.5, -1.0),
               std::domain_error);
}

TEST(ThresholdCurve, RejectsRhoOutsideTheWindow) {
  EXPECT_THROW((void)riclab::gaussian_srsr_curve(0.0), std::domain_error);
  EXPECT_THROW((void)riclab::gaussian_srsr_curve(riclab::rho_zero()),
               std::domain_error);
  EXPECT_THROW((void)riclab::psi0(Route::eigen, 0.07, RateModel::ds()),
               std::domain_error);
}

}  // namespace
