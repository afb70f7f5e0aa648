#include "riclab/fs_bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

using riclab::FsConstants;

TEST(DiagramBound, MatchesFrozenValueAndLogForm) {
  EXPECT_NEAR(riclab::d1_bound(2), 1264.527542077277176456323, 1e-9 * 1264.0);
  EXPECT_NEAR(riclab::d1_bound(20), std::exp(riclab::d1_bound_log(20)),
              1e-6 * riclab::d1_bound(20));
  EXPECT_THROW((void)riclab::d1_bound(0), std::domain_error);
}

TEST(DiagramBound, GrowsMonotonicallyInS) {
  double prev = riclab::d1_bound_log(1);
  for (uint64_t s = 2; s <= 40; ++s) {
    const double cur = riclab::d1_bound_log(s);
    EXPECT_GT(cur, prev) << "s=" << s;
    prev = cur;
  }
}

TEST(PathBound, MatchesFrozenValue) {
  EXPECT_NEAR(riclab::path_bound(1, 54, 54), 12.68645625077627391605055,
              1e-12);
  EXPECT_THROW((void)riclab::path_bound(1, 55, 54), std::domain_error);
}

TEST(TraceBound, MatchesFrozenValueAndGrowsInM) {
  EXPECT_NEAR(riclab::trace_bound_delta(1, 54, 108),
              2434.689630256100067437858, 1e-9 * 2434.0);
  double prev = riclab::trace_bound_delta(1, 54, 108);
  for (uint64_t m = 2; m <= 6; ++m) {
    const double cur = riclab::trace_bound_delta(m, 54, 108);
    EXPECT_GT(cur, prev);
    prev = cur;
  }
  EXPECT_THROW((void)riclab::trace_bound_delta(1, 53, 108),
               std::domain_error);
}

TEST(TailBound, MatchesFrozenValuesInBothScales) {
  const auto tail = riclab::fs_tail_bound(54, 540, 5.0, 1.0);
  EXPECT_NEAR(tail.log_value, 5.452674086809898812332112, 1e-9);
  EXPECT_NEAR(tail.value(), 233.3814143878914850983268, 1e-6 * 233.0);
}

TEST(TailBound, ShrinksAtScaleAndApproachesTheSmallEpsLimit) {
  // The exponent term -N*W grows linearly with the matrix size at a fixed
  // aspect ratio and eventually drives the bound down.
  EXPECT_LT(riclab::fs_tail_bound(5400, 54000, 5.0, 1.0).log_value,
            riclab::fs_tail_bound(54, 540, 5.0, 1.0).log_value);
  // As eps -> 0 the bound tends to c0 * M / (1 - rho).
  EXPECT_NEAR(riclab::fs_tail_bound(54, 540, 1e-12, 1.0).value(),
              54.0 / 0.9, 1e-4);
}

TEST(TailBound, RejectsBadArguments) {
  EXPECT_THROW((void)riclab::fs_tail_bound(54, 540, 0.0, 1.0),
               std::domain_error);
  EXPECT_THROW((void)riclab::fs_tail_bound(54, 540, 1.0, 0.0),
               std::domain_error);
  EXPECT_THROW((void)riclab::fs_tail_bound(54, 54, 1.0, 1.0),
               std::domain_error);
}

TEST(ModerateBound, MatchesFrozenValueAndEnforcesStrictRange) {
  EXPECT_NEAR(riclab::fs_moderate_bound(54, 216, 0.4, 3300.0),
              -0.005203940020363146929824986, 1e-15);
  // eps must stay strictly below sqrt(M/N) = 0.5 here.
  EXPECT_THROW((void)riclab::fs_moderate_bound(54, 216, 0.5, 3300.0),
               std::domain_error);
  // The constant must strictly exceed the variance-proxy constant.
  EXPECT_THROW((void)riclab::fs_moderate_bound(54, 216, 0.4, 3242.0),
               std::domain_error);
}

TEST(ConstantChain, AllRelationsHealthyIncludingTheKnownDiscrepancy) {
  const auto report = riclab::verify_constant_chain(FsConstants{});
  EXPECT_TRUE(report.all_ok);
  int mismatch_probes = 0;
  for (const auto& rel : report.relations) {
    EXPECT_TRUE(rel.ok()) << rel.name;
    if (!rel.expect_match) {
      ++mismatch_probes;
      EXPECT_FALSE(rel.within_tol) << rel.name;
      EXPECT_NEAR(rel.computed, 1029552.308, 1e-6 * 1029552.0);
    }
  }
  EXPECT_EQ(mismatch_probes, 1);
}

TEST(ConstantChain, RelationsReproduceFrozenComputedValues) {
  const auto report = riclab::verify_constant_chain(FsConstants{});
  EXPECT_NEAR(report.relations[0].computed, 95277.6, 1e-9 * 95277.6);
  EXPECT_NEAR(report.relations[1].computed, 830414.836, 1e-9 * 830414.0);
  EXPECT_NEAR(report.relations[2].computed, 837.0559457109184168655507,
              1e-12 * 837.0);
  EXPECT_NEAR(report.relations[3].computed, 3242.083937409077504439783,
              1e-12 * 3242.0);
}

TEST(ConstantChain, DetectsACorruptedConstant) {
  FsConstants k{};
  k.c_rad = 830415.0 * 1.01;
  const auto report = riclab::verify_constant_chain(k);
  EXPECT_FALSE(report.all_ok);
}

}  // namespace
