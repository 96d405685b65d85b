#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <type_traits>
#include <utility>
#include <vector>

#include "ils/core/acceptance.hpp"
#include "ils/core/error.hpp"
#include "ils/core/history.hpp"
#include "ils/core/rng.hpp"
#include "ils/core/run_record.hpp"
#include "ils/core/solution.hpp"
#include "ils/core/termination.hpp"

namespace ils {

struct EngineOptions {
  /// Record every `trace_stride`-th iteration; improvements and the first
  /// and last iterations are always recorded. 0 keeps only those.
  std::uint64_t trace_stride = 1;
  /// Called for every recorded trace entry.
  std::function<void(const TraceEntry&)> on_trace;
};

template <WalkState S>
struct EscapeResult {
  S state;          // walk continues from here
  S cheapest;       // lowest-cost local optimum seen during the escape
  bool escaped = false;
  std::uint64_t distance = 0;
  std::uint64_t local_searches = 0;
};

/// Diversification that forces the walk beyond a minimal distance from
/// s_c. Keeps a pool of p copies, repeatedly perturbing and re-optimizing
/// them (the pool drifts further every round); each round the q cheapest
/// are candidates and the one farthest from s_c is examined. Returns the
/// first candidate with distance > min_distance, or the cheapest candidate
/// of the last round with `escaped == false` once attempts run out.
template <WalkState S, class PerturbFn, class LsFn, class DistanceFn>
EscapeResult<S> escape_beyond_distance(const S& s_c, const DistanceEscapeParams& params,
                                       PerturbFn&& perturb, LsFn&& local_search,
                                       DistanceFn&& distance, Rng& rng) {
  if (params.copies == 0 || params.keep == 0 || params.keep > params.copies)
    throw ConfigError("escape: need 0 < keep <= copies");

  std::vector<S> pool(params.copies, s_c);
  std::vector<std::size_t> by_cost(pool.size());
  EscapeResult<S> out{s_c, s_c, false, 0, 0};

  for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
    for (auto& s : pool) {
      perturb(s, rng);
      local_search(s, rng);
    }
    out.local_searches += pool.size();

    std::iota(by_cost.begin(), by_cost.end(), std::size_t{0});
    std::stable_sort(by_cost.begin(), by_cost.end(), [&](std::size_t a, std::size_t b) {
      return pool[a].get_cost() < pool[b].get_cost();
    });
    if (pool[by_cost[0]].get_cost() < out.cheapest.get_cost()) out.cheapest = pool[by_cost[0]];

    std::size_t chosen = by_cost[0];
    std::uint64_t chosen_dist = distance(pool[chosen], s_c);
    for (std::size_t r = 1; r < params.keep; ++r) {
      const std::uint64_t d = distance(pool[by_cost[r]], s_c);
      if (d > chosen_dist) {
        chosen = by_cost[r];
        chosen_dist = d;
      }
    }
    if (chosen_dist > params.min_distance) {
      out.state = pool[chosen];
      out.distance = chosen_dist;
      out.escaped = true;
      return out;
    }
    out.state = pool[by_cost[0]];
    out.distance = distance(out.state, s_c);
  }
  return out;
}

/// The main loop: s0 = initial(); s* = local_search(s0); then
/// {perturb, local search, accept} until termination. All randomness comes
/// from sub-streams of `seed` with fixed labels, so a run is reproducible
/// bit for bit. The best local optimum ever visited is tracked
/// independently of acceptance.
///
/// Callable contracts (State deduced from InitFn):
///   initial(Rng&) -> State            fresh solution, not yet optimized
///   local_search(State&, Rng&)        descends to a local optimum in place
///   perturb(State&, Rng&)             kicks the state in place
///   restart_source(Rng&) -> State     fresh solution for Restart acceptance
///   distance(const State&, const State&) -> uint64   for DistanceEscape
template <class InitFn, class LsFn, class PerturbFn,
          class RestartFn = std::nullptr_t, class DistanceFn = std::nullptr_t>
RunRecord run_ils(InitFn&& initial, LsFn&& local_search, PerturbFn&& perturb,
                  const AcceptanceCriterion& acceptance, const Termination& termination,
                  std::uint64_t seed, RestartFn&& restart_source = nullptr,
                  DistanceFn&& distance = nullptr, const EngineOptions& opts = {}) {
  using State = std::decay_t<std::invoke_result_t<InitFn&, Rng&>>;
  static_assert(WalkState<State>, "initial() must return a walk state");
  constexpr bool kHasRestart = !std::is_same_v<std::decay_t<RestartFn>, std::nullptr_t>;
  constexpr bool kHasDistance = !std::is_same_v<std::decay_t<DistanceFn>, std::nullptr_t>;

  acceptance.validate();
  termination.validate();
  if (acceptance.kind == AcceptanceKind::Restart && !kHasRestart)
    throw ConfigError("acceptance: Restart needs a restart source");
  if (acceptance.kind == AcceptanceKind::DistanceEscape && !kHasDistance)
    throw ConfigError("acceptance: DistanceEscape needs a distance function");

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  Rng r_init(derive_seed(seed, "initial"));
  Rng r_pert(derive_seed(seed, "perturbation"));
  Rng r_acc(derive_seed(seed, "acceptance"));

  RunRecord rec;
  rec.seed = seed;
  SearchHistory hist;
  double temperature = acceptance.temperature;

  State current = initial(r_init);
  local_search(current, r_init);
  ++rec.n_local_searches;

  State best = current;
  hist.best = to_solution(best);

  std::uint64_t last_recorded = 0;
  auto record = [&](std::uint64_t i, Cost walk_cost) {
    TraceEntry e{i, walk_cost, best.get_cost(), elapsed()};
    hist.trace.push_back(e);
    if (opts.on_trace) opts.on_trace(e);
    last_recorded = i;
  };
  record(0, current.get_cost());

  auto done = [&] {
    if (termination.target_cost && best.get_cost() <= *termination.target_cost) return true;
    if (termination.max_iterations && hist.iteration >= *termination.max_iterations) return true;
    if (termination.max_wall_time_s && elapsed() >= *termination.max_wall_time_s) return true;
    return false;
  };

  State work = current;
  while (!done()) {
    const std::uint64_t i = ++hist.iteration;
    const Cost prev_cost = current.get_cost();
    bool improved_best = false;

    work = current;
    perturb(work, r_pert);
    local_search(work, r_pert);
    ++rec.n_local_searches;

    if (work.get_cost() < best.get_cost()) {
      best = work;
      hist.best = to_solution(best);
      improved_best = true;
    }

    bool restarted = false;
    switch (accept_decision(acceptance, temperature, current.get_cost(), work.get_cost(),
                            hist, r_acc)) {
      case AcceptDecision::TakeCandidate:
        std::swap(current, work);
        ++rec.n_accepted;
        break;
      case AcceptDecision::RestartWalk:
        if constexpr (kHasRestart) {
          current = restart_source(r_acc);
          local_search(current, r_acc);
          ++rec.n_local_searches;
          ++rec.n_restarts;
          if (current.get_cost() < best.get_cost()) {
            best = current;
            hist.best = to_solution(best);
            improved_best = true;
          }
          restarted = true;
        }
        break;
      case AcceptDecision::KeepCurrent:
        break;
    }

    if (acceptance.kind == AcceptanceKind::DistanceEscape && !restarted &&
        i - hist.last_improvement > acceptance.patience) {
      if constexpr (kHasDistance) {
        auto esc = escape_beyond_distance(best, acceptance.escape, perturb, local_search,
                                          distance, r_acc);
        rec.n_local_searches += esc.local_searches;
        ++rec.n_escapes;
        if (esc.cheapest.get_cost() < best.get_cost()) {
          best = esc.cheapest;
          hist.best = to_solution(best);
          improved_best = true;
        }
        current = std::move(esc.state);
        restarted = true;
      }
    }

    if (restarted) {
      hist.last_improvement = i;  // patience clock restarts after a fresh start
    } else if (current.get_cost() < prev_cost) {
      hist.last_improvement = i;
    }

    if (improved_best || (opts.trace_stride != 0 && i % opts.trace_stride == 0))
      record(i, current.get_cost());
  }

  if (last_recorded != hist.iteration) record(hist.iteration, current.get_cost());

  rec.best = to_solution(best);
  rec.n_iterations = hist.iteration;
  rec.elapsed_s = elapsed();
  rec.trace = std::move(hist.trace);
  return rec;
}

}  // namespace ils
