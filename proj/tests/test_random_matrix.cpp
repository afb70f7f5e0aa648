#include "riclab/random_matrix.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "riclab/rng.hpp"

namespace {

using riclab::Ensemble;
using riclab::EnsembleKind;
using riclab::RateModel;
using riclab::Tail;

TEST(Rng, StreamsAreReproducibleAndDerivedStreamsDiffer) {
  riclab::Rng a(12345);
  riclab::Rng b(12345);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next_u64(), b.next_u64());
  }
  EXPECT_NE(riclab::derive_stream(7, 0), riclab::derive_stream(7, 1));
  EXPECT_NE(riclab::derive_stream(7, 0), riclab::derive_stream(8, 0));
}

TEST(Rng, GaussianMomentsAreSane) {
  riclab::Rng rng(555);
  double sum = 0.0;
  double sumsq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gaussian();
    sum += g;
    sumsq += g * g;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sumsq / n, 1.0, 0.02);
}

TEST(Rng, RademacherIsExactlyPlusMinusOne) {
  riclab::Rng rng(99);
  int plus = 0;
  for (int i = 0; i < 10000; ++i) {
    const double v = rng.rademacher();
    ASSERT_TRUE(v == 1.0 || v == -1.0);
    plus += v > 0.0;
  }
  EXPECT_NEAR(plus / 10000.0, 0.5, 0.03);
}

TEST(SampleMatrix, IsBitIdenticalForIdenticalSeeds) {
  const auto m1 = riclab::sample_matrix({EnsembleKind::gaussian, 321}, 8, 5);
  const auto m2 = riclab::sample_matrix({EnsembleKind::gaussian, 321}, 8, 5);
  EXPECT_EQ((m1 - m2).cwiseAbs().maxCoeff(), 0.0);
  const auto m3 = riclab::sample_matrix({EnsembleKind::gaussian, 322}, 8, 5);
  EXPECT_GT((m1 - m3).cwiseAbs().maxCoeff(), 0.0);
}

TEST(MarchenkoPasturEdges, MatchClosedFormAndRejectBadRatio) {
  const auto edges = riclab::mp_edges(0.25);
  EXPECT_DOUBLE_EQ(edges.lower, 0.25);
  EXPECT_DOUBLE_EQ(edges.upper, 2.25);
  EXPECT_THROW((void)riclab::mp_edges(1.0), std::domain_error);
}

TEST(WilsonInterval, BracketsTheEmpiricalRateInsideUnitRange) {
  for (const auto& [hits, trials] :
       {std::pair<uint64_t, uint64_t>{0, 50}, {50, 50}, {1, 3}, {17, 400}}) {
    const auto [lo, hi] = riclab::wilson_interval(hits, trials);
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    EXPECT_GE(lo, 0.0);
    EXPECT_LE(hi, 1.0);
    EXPECT_LE(lo, p);
    EXPECT_GE(hi, p);
  }
  EXPECT_THROW((void)riclab::wilson_interval(1, 0), std::domain_error);
}

TEST(McDeviation, IsReproducibleAndReportsRealizedShape) {
  const auto a = riclab::mc_deviation({EnsembleKind::gaussian, 77}, 100, 0.1,
                                      0.3, 50);
  const auto b = riclab::mc_deviation({EnsembleKind::gaussian, 77}, 100, 0.1,
                                      0.3, 50);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.r, 10u);
  EXPECT_DOUBLE_EQ(a.rhobar, 0.1);
  EXPECT_DOUBLE_EQ(a.p_hat, b.p_hat);
}

TEST(McDeviation, TheoryBoundOnlyOnTheGaussianSingularRoute) {
  const auto ds = riclab::mc_deviation({EnsembleKind::gaussian, 5}, 80, 0.1,
                                       0.4, 20, Tail::either, RateModel::ds(),
                                       riclab::Route::singular);
  ASSERT_TRUE(ds.theory_bound.has_value());
  EXPECT_NEAR(*ds.theory_bound, 2.0 * std::exp(-ds.theory_exponent), 1e-15);
  EXPECT_NEAR(ds.theory_exponent, 80 * 0.4 * 0.4 / 2.0, 1e-12);

  const auto lr = riclab::mc_deviation({EnsembleKind::gaussian, 5}, 80, 0.1,
                                       0.4, 20, Tail::either, RateModel::lr(),
                                       riclab::Route::singular);
  EXPECT_FALSE(lr.theory_bound.has_value());
  EXPECT_GT(lr.theory_exponent, 0.0);
}

TEST(McDeviation, TinyThresholdMakesTheBoundVacuous) {
  const auto est = riclab::mc_deviation({EnsembleKind::gaussian, 5}, 60, 0.1,
                                        1e-6, 10);
  ASSERT_TRUE(est.theory_bound.has_value());
  EXPECT_TRUE(est.theory_vacuous);
  EXPECT_GE(*est.theory_bound, 1.0);
}

TEST(McDeviation, MedianLargestEigenvalueTracksTheUpperEdge) {
  // n = 400, r = 100: the median of lambda_max(C) sits within
  // O(n^{-2/3}) of the upper edge (1 + sqrt(0.25))^2 = 2.25.
  std::vector<double> maxima;
  for (uint64_t i = 0; i < 61; ++i) {
    const auto x = riclab::sample_matrix(
        {EnsembleKind::gaussian, riclab::derive_stream(20240815, i)}, 100,
        400);
    const Eigen::MatrixXd c = x * x.transpose() / 400.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c,
                                                      Eigen::EigenvaluesOnly);
    maxima.push_back(es.eigenvalues()(99));
  }
  std::nth_element(maxima.begin(), maxima.begin() + 30, maxima.end());
  EXPECT_NEAR(maxima[30], 2.25, 5.0 * std::pow(400.0, -2.0 / 3.0));
}

TEST(McDeviation, RejectsInvalidArguments) {
  EXPECT_THROW((void)riclab::mc_deviation({}, 0, 0.1, 0.3, 10),
               std::domain_error);
  EXPECT_THROW((void)riclab::mc_deviation({}, 100, 0.1, 0.3, 0),
               std::domain_error);
  EXPECT_THROW((void)riclab::mc_deviation({}, 100, 1.5, 0.3, 10),
               std::domain_error);
  EXPECT_THROW((void)riclab::mc_deviation({}, 100, 0.1, 0.0, 10),
               std::domain_error);
  EXPECT_THROW((void)riclab::mc_deviation({}, 100, 0.001, 0.3, 10),
               std::domain_error);
}

}  // namespace
