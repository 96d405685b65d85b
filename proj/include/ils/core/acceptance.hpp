#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "ils/core/error.hpp"
#include "ils/core/history.hpp"
#include "ils/core/rng.hpp"
#include "ils/core/solution.hpp"

namespace ils {

enum class AcceptanceKind {
  Better,        // candidate iff strictly cheaper
  RandomWalk,    // always candidate
  LSMC,          // Metropolis with (optionally cooled) temperature
  ConstTemp,     // Metropolis with a constant temperature
  Restart,       // Better, plus a fresh start after `patience` stale iterations
  DistanceEscape // Better, plus an escape to a distant solution on stagnation
};

enum class RestartSource { Random, Greedy };

struct DistanceEscapeParams {
  std::size_t copies = 8;          // p
  std::size_t keep = 4;            // q, 1 < q <= p
  std::uint64_t min_distance = 1;  // d_min
  std::size_t max_attempts = 20;
};

struct AcceptanceCriterion {
  AcceptanceKind kind = AcceptanceKind::Better;
  double temperature = 1.0;   // LSMC initial T / ConstTemp T_c
  double cooling = 1.0;       // LSMC: T <- cooling * T on every acceptance test
  std::uint64_t patience = 100;  // Restart i_r; DistanceEscape stagnation trigger
  RestartSource restart_source = RestartSource::Random;
  DistanceEscapeParams escape;

  void validate() const {
    switch (kind) {
      case AcceptanceKind::LSMC:
        if (cooling <= 0.0 || cooling > 1.0)
          throw ConfigError("acceptance: LSMC cooling factor must be in (0, 1]");
        [[fallthrough]];
      case AcceptanceKind::ConstTemp:
        if (!(temperature > 0.0))
          throw ConfigError("acceptance: temperature must be > 0");
        break;
      case AcceptanceKind::Restart:
        if (patience < 1) throw ConfigError("acceptance: restart patience must be >= 1");
        break;
      case AcceptanceKind::DistanceEscape:
        if (patience < 1) throw ConfigError("acceptance: escape patience must be >= 1");
        if (escape.keep <= 1 || escape.keep > escape.copies)
          throw ConfigError("acceptance: escape requires 1 < keep <= copies");
        if (escape.min_distance < 1)
          throw ConfigError("acceptance: escape min distance must be >= 1");
        if (escape.max_attempts < 1)
          throw ConfigError("acceptance: escape max attempts must be >= 1");
        break;
      case AcceptanceKind::Better:
      case AcceptanceKind::RandomWalk:
        break;
    }
  }
};

inline std::string to_string(AcceptanceKind k) {
  switch (k) {
    case AcceptanceKind::Better: return "better";
    case AcceptanceKind::RandomWalk: return "rw";
    case AcceptanceKind::LSMC: return "lsmc";
    case AcceptanceKind::ConstTemp: return "const-temp";
    case AcceptanceKind::Restart: return "restart";
    case AcceptanceKind::DistanceEscape: return "distance-escape";
  }
  return "?";
}

enum class AcceptDecision { KeepCurrent, TakeCandidate, RestartWalk };

/// The acceptance rules on costs alone. `temperature` is the per-run
/// mutable Metropolis state (LSMC cools it on every test). Metropolis
/// accepts a worse candidate with probability exp((current-candidate)/T);
/// an equal-cost candidate is accepted with probability 1, whereas Better
/// rejects it (strict inequality).
inline AcceptDecision accept_decision(const AcceptanceCriterion& c, double& temperature,
                                      Cost current, Cost candidate,
                                      const SearchHistory& history, Rng& rng) {
  switch (c.kind) {
    case AcceptanceKind::Better:
    case AcceptanceKind::DistanceEscape:
      // DistanceEscape behaves like Better here; the escape itself is a
      // walk-level event handled by the engine when stagnation triggers.
      return candidate < current ? AcceptDecision::TakeCandidate : AcceptDecision::KeepCurrent;

    case AcceptanceKind::RandomWalk:
      return AcceptDecision::TakeCandidate;

    case AcceptanceKind::LSMC:
    case AcceptanceKind::ConstTemp: {
      AcceptDecision d;
      if (candidate < current) {
        d = AcceptDecision::TakeCandidate;
      } else {
        const double p = std::exp(static_cast<double>(current - candidate) / temperature);
        d = rng.uniform01() < p ? AcceptDecision::TakeCandidate : AcceptDecision::KeepCurrent;
      }
      if (c.kind == AcceptanceKind::LSMC) temperature *= c.cooling;
      return d;
    }

    case AcceptanceKind::Restart:
      if (candidate < current) return AcceptDecision::TakeCandidate;
      if (history.iteration - history.last_improvement > c.patience)
        return AcceptDecision::RestartWalk;
      return AcceptDecision::KeepCurrent;
  }
  return AcceptDecision::KeepCurrent;
}

template <WalkState S>
struct AcceptOutcome {
  S next;
  bool took_candidate = false;
  bool restarted = false;
};

/// Full acceptance step: picks the next walk state among current,
/// candidate, and (for Restart) a fresh solution from the restart source.
template <WalkState S, class RestartFn>
AcceptOutcome<S> accept(const AcceptanceCriterion& criterion, double& temperature,
                        const S& current, const S& candidate,
                        const SearchHistory& history, Rng& rng, RestartFn&& restart_source) {
  switch (accept_decision(criterion, temperature, current.get_cost(), candidate.get_cost(),
                          history, rng)) {
    case AcceptDecision::TakeCandidate:
      return {candidate, true, false};
    case AcceptDecision::RestartWalk:
      return {restart_source(rng), false, true};
    case AcceptDecision::KeepCurrent:
      break;
  }
  return {current, false, false};
}

}  // namespace ils
