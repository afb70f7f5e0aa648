#include "suites.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace {

TEST(SelftestSuites, EverySuiteIsRunnableByName) {
  const auto& names = riclab::selftest::suite_names();
  EXPECT_EQ(names.size(), 15u);
  EXPECT_THROW((void)riclab::selftest::run_suite("missing"),
               std::invalid_argument);
}

TEST(SelftestSuites, AllSuitesPass) {
  for (const auto& result : riclab::selftest::run_all()) {
    EXPECT_TRUE(result.pass()) << result.suite;
    for (const auto& check : result.checks) {
      EXPECT_TRUE(check.pass) << result.suite << ": " << check.name << " ("
                              << check.detail << ")";
    }
  }
}

}  // namespace
