#include "riclab/scalar.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "riclab/constants.hpp"

namespace {

using riclab::binomial_envelope_theta;
using riclab::binomial_log_bound_check;
using riclab::log_binomial;
using riclab::shannon_entropy;
using riclab::stirling_theta;

TEST(ShannonEntropy, MatchesFrozenValues) {
  EXPECT_NEAR(shannon_entropy(0.5), std::numbers::ln2, 1e-15);
  // 50-digit evaluation of -t ln t - (1-t) ln(1-t) at t = 0.02.
  EXPECT_NEAR(shannon_entropy(0.02), 0.09803911327973198061225941, 1e-15);
  EXPECT_NEAR(shannon_entropy(5e-7), 7.754328744262088873424049e-6, 1e-19);
}

TEST(ShannonEntropy, IsSymmetricAroundOneHalf) {
  for (const double t : {0.01, 0.1, 0.25, 0.4, 0.49}) {
    EXPECT_NEAR(shannon_entropy(t), shannon_entropy(1.0 - t), 1e-15);
  }
}

TEST(ShannonEntropy, RejectsArgumentsOutsideOpenUnitInterval) {
  EXPECT_THROW((void)shannon_entropy(0.0), std::domain_error);
  EXPECT_THROW((void)shannon_entropy(1.0), std::domain_error);
  EXPECT_THROW((void)shannon_entropy(-0.1), std::domain_error);
  EXPECT_THROW((void)shannon_entropy(1.5), std::domain_error);
}

TEST(LogBinomial, MatchesExactIntegerOracle) {
  // ln C(200, 4) against the big-integer evaluation C(200, 4) = 64684950.
  EXPECT_NEAR(log_binomial(200, 4), 17.98503912035710719626586, 1e-12);
  EXPECT_EQ(riclab::selftest::binomial_decimal_oracle(200, 4), "64684950");
  EXPECT_NEAR(log_binomial(4, 2), 1.791759469228055000812477, 1e-14);
  for (const auto& [p, r] : {std::pair<uint64_t, uint64_t>{20, 10},
                             {64, 5},
                             {500, 26},
                             {1000, 3}}) {
    EXPECT_NEAR(log_binomial(p, r),
                riclab::selftest::log_binomial_oracle(p, r),
                1e-9 * std::abs(riclab::selftest::log_binomial_oracle(p, r)));
  }
}

TEST(LogBinomial, BoundaryCasesAreExactlyZero) {
  EXPECT_EQ(log_binomial(17, 0), 0.0);
  EXPECT_EQ(log_binomial(17, 17), 0.0);
  EXPECT_EQ(log_binomial(0, 0), 0.0);
}

TEST(LogBinomial, RejectsRLargerThanP) {
  EXPECT_THROW((void)log_binomial(3, 4), std::domain_error);
}

TEST(BinomialEnvelope, MatchesFrozenValues) {
  EXPECT_NEAR(binomial_envelope_theta(100, 2), 0.5105313384160916854500387,
              1e-12);
  EXPECT_NEAR(binomial_envelope_theta(10, 5), 0.489312923018483927844642,
              1e-12);
}

TEST(BinomialEnvelope, DominatesExactBinomialsUpToSixty) {
  // C(p, r) <= Theta(p, r) * exp(p H(r/p)) for every 1 <= r < p <= 60,
  // checked against exact big-integer binomials.
  for (uint64_t p = 2; p <= 60; ++p) {
    for (uint64_t r = 1; r < p; ++r) {
      const double lhs = riclab::selftest::log_binomial_oracle(p, r);
      const double rhs =
          std::log(binomial_envelope_theta(p, r)) +
          static_cast<double>(p) *
              shannon_entropy(static_cast<double>(r) / static_cast<double>(p));
      EXPECT_LE(lhs, rhs + 1e-12) << "p=" << p << " r=" << r;
    }
  }
}

TEST(BinomialEnvelope, RejectsDegenerateRatios) {
  EXPECT_THROW((void)binomial_envelope_theta(10, 0), std::domain_error);
  EXPECT_THROW((void)binomial_envelope_theta(10, 10), std::domain_error);
}

TEST(StirlingTheta, StaysInsideOpenUnitInterval) {
  for (double z = 1e-3; z < 1e6; z *= 1.7) {
    const double th = stirling_theta(z);
    EXPECT_GT(th, 0.0) << "z=" << z;
    EXPECT_LT(th, 1.0) << "z=" << z;
  }
}

TEST(StirlingTheta, MatchesFrozenValues) {
  EXPECT_NEAR(stirling_theta(1.0), 0.9727376015439270986360432, 1e-12);
  EXPECT_NEAR(stirling_theta(10.0), 0.9996676120035445507763182, 1e-12);
  EXPECT_NEAR(stirling_theta(1e-3), 0.03050724561560513462108498, 1e-12);
  EXPECT_NEAR(stirling_theta(1e6), 0.9999999999999666666666667, 1e-15);
}

TEST(StirlingTheta, RejectsNonpositiveArguments) {
  EXPECT_THROW((void)stirling_theta(0.0), std::domain_error);
  EXPECT_THROW((void)stirling_theta(-1.0), std::domain_error);
}

TEST(BinomialLogBounds, HoldOnSampleOfPairs) {
  for (const auto& [m, n] : {std::pair<uint64_t, uint64_t>{1, 1},
                             {10, 3},
                             {100, 7},
                             {500, 26},
                             {500, 500}}) {
    const auto b = binomial_log_bound_check(m, n);
    EXPECT_LE(b.even.lhs, b.even.rhs) << "m=" << m << " n=" << n;
    EXPECT_LE(b.odd.lhs, b.odd.rhs) << "m=" << m << " n=" << n;
  }
}

TEST(BinomialLogBounds, MatchesFrozenValuesAtSmallestPair) {
  const auto b = binomial_log_bound_check(1, 1);
  EXPECT_NEAR(b.even.lhs, -1.3862943611198906188, 1e-12);
  EXPECT_NEAR(b.odd.lhs, -0.98082925301172623686, 1e-12);
  EXPECT_NEAR(b.even.rhs, 4.3679, 1e-12);
  EXPECT_NEAR(b.odd.rhs, 1.3445, 1e-12);
}

TEST(BinomialLogBounds, RejectsPairsOutsideTriangle) {
  EXPECT_THROW((void)binomial_log_bound_check(2, 3), std::domain_error);
  EXPECT_THROW((void)binomial_log_bound_check(5, 0), std::domain_error);
}

TEST(UniversalConstants, SatisfyTheDefiningAlgebra) {
  const auto& c = riclab::universal_constants();
  const double s41 = std::sqrt(41.0);
  EXPECT_DOUBLE_EQ(c.rho0, (33.0 - 5.0 * s41) / 16.0);
  EXPECT_DOUBLE_EQ(c.tau0, 4.0 / s41);
  EXPECT_DOUBLE_EQ(c.gamma0, (4.0 + s41) * (4.0 + s41) / 25.0);
  EXPECT_NEAR((1.0 + c.tau0) / (1.0 - c.tau0), c.gamma0, 1e-12 * c.gamma0);
}

}  // namespace
