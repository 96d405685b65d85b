#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ils/core/error.hpp"
#include "ils/core/solution.hpp"

namespace ils::tsp {

/// Round to nearest integer, ties away from zero (the TSPLIB convention
/// for EUC_2D edge weights).
inline int nint(double x) { return static_cast<int>(std::llround(x)); }

/// Symmetric TSP instance. Either coordinate-based (EUC_2D, distances
/// rounded to nearest integer) or an explicit symmetric matrix. Immutable
/// after finalize(); safe to share across concurrent runs.
class TspInstance {
 public:
  std::string name;

  static TspInstance from_coords(std::string name, std::vector<double> xs,
                                 std::vector<double> ys, int candidate_k = kDefaultCandidates) {
    TspInstance inst;
    inst.name = std::move(name);
    inst.n_ = static_cast<int>(xs.size());
    inst.euclidean_ = true;
    inst.xs_ = std::move(xs);
    inst.ys_ = std::move(ys);
    inst.finalize(candidate_k);
    return inst;
  }

  /// Row-major n*n matrix; must be symmetric with zero diagonal.
  static TspInstance from_matrix(std::string name, int n, std::vector<int> weights,
                                 int candidate_k = kDefaultCandidates) {
    TspInstance inst;
    inst.name = std::move(name);
    inst.n_ = n;
    inst.weights_ = std::move(weights);
    inst.have_matrix_ = true;
    for (int i = 0; i < n; ++i) {
      if (inst.weights_[static_cast<std::size_t>(i) * n + i] != 0)
        throw ValidationError("distance matrix has nonzero diagonal");
      for (int j = i + 1; j < n; ++j)
        if (inst.weights_[static_cast<std::size_t>(i) * n + j] !=
            inst.weights_[static_cast<std::size_t>(j) * n + i])
          throw ValidationError("distance matrix is not symmetric");
    }
    inst.finalize(candidate_k);
    return inst;
  }

  int size() const { return n_; }
  bool euclidean() const { return euclidean_; }
  double x(int city) const { return xs_[static_cast<std::size_t>(city)]; }
  double y(int city) const { return ys_[static_cast<std::size_t>(city)]; }
  int candidate_k() const { return candidate_k_; }

  int dist(int a, int b) const {
    if (have_matrix_) return weights_[static_cast<std::size_t>(a) * n_ + b];
    const double dx = xs_[a] - xs_[b], dy = ys_[a] - ys_[b];
    return nint(std::sqrt(dx * dx + dy * dy));
  }

  /// The K nearest neighbors of `city`, ascending by distance (ties by
  /// city index).
  std::span<const int> candidates(int city) const {
    return {cand_.data() + static_cast<std::size_t>(city) * candidate_k_,
            static_cast<std::size_t>(candidate_k_)};
  }

  /// Mean distance from a city to its nearest neighbor.
  double mean_nearest_neighbor_dist() const {
    double sum = 0;
    for (int c = 0; c < n_; ++c) sum += dist(c, cand_[static_cast<std::size_t>(c) * candidate_k_]);
    return sum / n_;
  }

  /// Caches the distance matrix for small instances and builds the
  /// candidate lists. K is clamped to n-1.
  void finalize(int candidate_k) {
    if (n_ < 2) throw ValidationError("instance needs at least 2 cities");
    if (euclidean_ && !have_matrix_ && n_ <= kMatrixCacheLimit) {
      weights_.assign(static_cast<std::size_t>(n_) * n_, 0);
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
          const double dx = xs_[i] - xs_[j], dy = ys_[i] - ys_[j];
          const int d = nint(std::sqrt(dx * dx + dy * dy));
          weights_[static_cast<std::size_t>(i) * n_ + j] = d;
          weights_[static_cast<std::size_t>(j) * n_ + i] = d;
        }
      have_matrix_ = true;
    }
    build_candidate_lists(std::min(candidate_k, n_ - 1));
  }

  static constexpr int kDefaultCandidates = 40;

 private:
  static constexpr int kMatrixCacheLimit = 2048;

  void build_candidate_lists(int k) {
    candidate_k_ = k;
    cand_.assign(static_cast<std::size_t>(n_) * k, 0);
    std::vector<int> others(static_cast<std::size_t>(n_ - 1));
    for (int c = 0; c < n_; ++c) {
      int m = 0;
      for (int o = 0; o < n_; ++o)
        if (o != c) others[m++] = o;
      std::partial_sort(others.begin(), others.begin() + k, others.end(), [&](int a, int b) {
        const int da = dist(c, a), db = dist(c, b);
        return da != db ? da < db : a < b;
      });
      std::copy(others.begin(), others.begin() + k,
                cand_.begin() + static_cast<std::size_t>(c) * k);
    }
  }

  int n_ = 0;
  bool euclidean_ = false;
  bool have_matrix_ = false;
  std::vector<double> xs_, ys_;
  std::vector<int> weights_;
  int candidate_k_ = 0;
  std::vector<int> cand_;
};

}  // namespace ils::tsp
