#pragma once

#include <concepts>
#include <cstdint>
#include <numeric>
#include <vector>

namespace ils {

/// Exact integer objective value. All supported problems have integer
/// objectives under their rounding rules, so acceptance decisions never
/// touch floating point.
using Cost = std::int64_t;

/// A permutation of 0..n-1 with its evaluated cost. This is the
/// problem-agnostic record kept in run results and histories; problem
/// modules carry richer walk states (tours with inverse permutations,
/// don't-look bits, ...) that expose the same two accessors.
struct Solution {
  std::vector<int> perm;
  Cost cost = 0;

  Cost get_cost() const { return cost; }
  const std::vector<int>& order() const { return perm; }

  bool operator==(const Solution&) const = default;
};

/// Anything the engine can walk on: a copyable state with a cached cost
/// and an underlying permutation.
template <class S>
concept WalkState = std::copyable<S> && requires(const S& s) {
  { s.get_cost() } -> std::convertible_to<Cost>;
  { s.order() } -> std::convertible_to<const std::vector<int>&>;
};

template <WalkState S>
Solution to_solution(const S& s) {
  return Solution{s.order(), s.get_cost()};
}

inline bool is_permutation_of_n(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline std::vector<int> identity_permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace ils
