#pragma once

#include <cstdint>
#include <optional>

#include "ils/core/error.hpp"
#include "ils/core/solution.hpp"

namespace ils {

/// Stop rule for one run. At least one bound must be set; the wall-time
/// bound is checked against a monotonic clock once per iteration.
struct Termination {
  std::optional<double> max_wall_time_s;
  std::optional<std::uint64_t> max_iterations;
  std::optional<Cost> target_cost;

  void validate() const {
    if (!max_wall_time_s && !max_iterations && !target_cost)
      throw ConfigError("termination: no bound set (need wall time, iterations, or target cost)");
    if (max_wall_time_s && *max_wall_time_s <= 0.0)
      throw ConfigError("termination: wall time bound must be positive");
  }

  static Termination iterations(std::uint64_t n) {
    Termination t;
    t.max_iterations = n;
    return t;
  }
  static Termination wall_time(double seconds) {
    Termination t;
    t.max_wall_time_s = seconds;
    return t;
  }
};

}  // namespace ils
