#pragma once

#include <cstdint>
#include <vector>

#include "ils/core/history.hpp"
#include "ils/core/solution.hpp"

namespace ils {

/// Everything one run produces. `best` is the cheapest local optimum the
/// walk ever visited, kept even when acceptance rejected it.
struct RunRecord {
  std::uint64_t seed = 0;
  Solution best;
  std::uint64_t n_local_searches = 0;
  std::uint64_t n_accepted = 0;
  std::uint64_t n_iterations = 0;
  std::uint64_t n_restarts = 0;
  std::uint64_t n_escapes = 0;
  double elapsed_s = 0.0;
  std::vector<TraceEntry> trace;
};

}  // namespace ils
