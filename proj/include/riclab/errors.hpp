#pragma once

#include <stdexcept>
#include <string>

namespace riclab {

/// Thrown when an exhaustive computation would exceed its combinatorial
/// budget (e.g. enumerating more than 10^7 supports). The CLI maps this
/// to its resource-budget exit code.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riclab
