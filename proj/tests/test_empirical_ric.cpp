#include "riclab/empirical_ric.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "riclab/errors.hpp"

namespace {

using riclab::EnsembleKind;
using riclab::RicSampleMode;

TEST(EmpiricalRicOfMatrix, OrthonormalColumnsGiveVanishingConstants) {
  // QR of a fixed seeded matrix yields orthonormal columns, whose Gram
  // blocks are exact identities on every support.
  const auto raw = riclab::sample_matrix({EnsembleKind::gaussian, 2024}, 12, 6);
  const Eigen::MatrixXd q =
      Eigen::HouseholderQR<Eigen::MatrixXd>(raw).householderQ() *
      Eigen::MatrixXd::Identity(12, 6);
  const auto ric = riclab::empirical_ric_of_matrix(q, 3);
  EXPECT_LE(ric.c_min_hat, 1e-10);
  EXPECT_LE(ric.c_max_hat, 1e-10);
  EXPECT_TRUE(ric.exhaustive);
  EXPECT_EQ(ric.subsets_evaluated, 20u);
}

TEST(EmpiricalRicOfMatrix, FullSupportReducesToTheGlobalSpectrum) {
  const Eigen::MatrixXd m =
      riclab::sample_matrix({EnsembleKind::gaussian, 17}, 9, 4) / 3.0;
  const auto ric = riclab::empirical_ric_of_matrix(m, 4);
  const Eigen::MatrixXd gram = m.transpose() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram,
                                                    Eigen::EigenvaluesOnly);
  EXPECT_NEAR(ric.c_max_hat, std::max(0.0, es.eigenvalues()(3) - 1.0), 1e-12);
  EXPECT_NEAR(ric.c_min_hat, std::max(0.0, 1.0 - es.eigenvalues()(0)), 1e-12);
  EXPECT_EQ(ric.subsets_evaluated, 1u);
}

TEST(EmpiricalRic, ExhaustiveScanIsReproducibleAndCountsAllSupports) {
  const auto a = riclab::empirical_ric({EnsembleKind::gaussian, 31}, 16, 20, 2);
  const auto b = riclab::empirical_ric({EnsembleKind::gaussian, 31}, 16, 20, 2);
  EXPECT_EQ(a.subsets_evaluated, 190u);
  EXPECT_TRUE(a.exhaustive);
  EXPECT_EQ(a.c_min_hat, b.c_min_hat);
  EXPECT_EQ(a.c_max_hat, b.c_max_hat);
}

TEST(EmpiricalRic, SampledScanLowerBoundsTheExhaustiveOne) {
  const auto full = riclab::empirical_ric({EnsembleKind::gaussian, 8}, 10, 12,
                                          3);
  const auto part = riclab::empirical_ric({EnsembleKind::gaussian, 8}, 10, 12,
                                          3, RicSampleMode::sampled(40));
  EXPECT_FALSE(part.exhaustive);
  EXPECT_EQ(part.subsets_evaluated, 40u);
  EXPECT_LE(part.c_min_hat, full.c_min_hat + 1e-14);
  EXPECT_LE(part.c_max_hat, full.c_max_hat + 1e-14);
}

TEST(EmpiricalRic, AgreesWithAHandRolledEnumeration) {
  const Eigen::MatrixXd m =
      riclab::sample_matrix({EnsembleKind::rademacher, 5}, 6, 6) /
      std::sqrt(6.0);
  const auto ric = riclab::empirical_ric_of_matrix(m, 3);
  double lo = 1e300;
  double hi = -1e300;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) {
        Eigen::MatrixXd cols(6, 3);
        cols.col(0) = m.col(a);
        cols.col(1) = m.col(b);
        cols.col(2) = m.col(c);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
            cols.transpose() * cols, Eigen::EigenvaluesOnly);
        lo = std::min(lo, es.eigenvalues()(0));
        hi = std::max(hi, es.eigenvalues()(2));
      }
    }
  }
  EXPECT_NEAR(ric.c_min_hat, std::max(0.0, 1.0 - lo), 1e-14);
  EXPECT_NEAR(ric.c_max_hat, std::max(0.0, hi - 1.0), 1e-14);
  EXPECT_EQ(ric.subsets_evaluated, 20u);
}

TEST(EmpiricalRic, OverBudgetEnumerationRaisesBudgetError) {
  EXPECT_THROW(
      (void)riclab::empirical_ric({EnsembleKind::gaussian, 1}, 10, 40, 20),
      riclab::budget_error);
}

TEST(EmpiricalRic, RejectsInvalidArguments) {
  EXPECT_THROW((void)riclab::empirical_ric({EnsembleKind::gaussian, 1}, 10,
                                           12, 0),
               std::domain_error);
  EXPECT_THROW((void)riclab::empirical_ric({EnsembleKind::gaussian, 1}, 10,
                                           12, 13),
               std::domain_error);
  EXPECT_THROW((void)riclab::empirical_ric({EnsembleKind::gaussian, 1}, 10,
                                           12, 3, RicSampleMode::sampled(0)),
               std::domain_error);
}

}  // namespace
