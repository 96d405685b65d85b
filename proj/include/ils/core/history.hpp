#pragma once

#include <cstdint>
#include <vector>

#include "ils/core/solution.hpp"

namespace ils {

struct TraceEntry {
  std::uint64_t iteration = 0;
  Cost accepted = 0;  // cost of the walk state after the acceptance step
  Cost best = 0;      // best cost seen so far
  double elapsed_s = 0.0;
};

/// Bookkeeping the acceptance criteria may consult: the iteration counter,
/// the last iteration that strictly improved the walk's current cost, and
/// the best solution seen (tracked independently of acceptance, so a
/// random-walk acceptance cannot lose it).
struct SearchHistory {
  std::uint64_t iteration = 0;
  std::uint64_t last_improvement = 0;
  Solution best;
  std::vector<TraceEntry> trace;
};

}  // namespace ils
