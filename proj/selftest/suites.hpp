#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riclab/constants.hpp"

/**
 * Self-test suites: every library formula is exercised against frozen
 * reference values (50+ digit evaluations, exact integer combinatorics),
 * the independent oracles of oracles.hpp, and the documented invariants.
 * Results carry no timing information so that output is byte-reproducible.
 */
namespace riclab::selftest {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  [[nodiscard]] bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  [[nodiscard]] uint64_t failed() const {
    uint64_t n = 0;
    for (const auto& c : checks) {
      if (!c.pass) ++n;
    }
    return n;
  }
};

/// Registered suite names, in execution order.
[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
[[nodiscard]] SuiteResult run_suite(const std::string& name);

/// Runs every suite in registration order.
[[nodiscard]] std::vector<SuiteResult> run_all();

/// The universal-constants suite against an arbitrary constants struct;
/// used by mutation tests to prove the suite detects corrupted values.
[[nodiscard]] SuiteResult constants_suite_with(const UniversalConstants& c);

}  // namespace riclab::selftest
