#pragma once

#include <stdexcept>

namespace divgraph {

/// Raised when a computation is refused because its enumeration cost exceeds
/// the configured budget and no override was given.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace divgraph
