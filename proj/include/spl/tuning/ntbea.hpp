#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "spl/core/rng.hpp"
#include "spl/tuning/search_space.hpp"

namespace spl {

/// Bandit statistics over every 1-tuple, every 2-tuple and the full tuple of
/// dimension indices (duplicates removed for spaces with one or two dims).
class TupleModel {
 public:
  struct Stats {
    int n = 0;
    double sum = 0;
  };

  explicit TupleModel(int dims);

  void add(const Point& point, double fitness);

  int evaluations() const { return evaluations_; }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  /// Stats of tuple `t` for the values `point` takes on it.
  Stats stats(std::size_t t, const Point& point) const;

  /// Mean over tuples of the tuple mean; unseen tuples count as 0.
  double estimate(const Point& point) const;

  /// Optimistic score: mean over tuples of
  ///   (tuple mean, or k*sqrt(ln(N+1)) if unseen) + k*sqrt(ln(N+1) / (n + eps)).
  double score(const Point& point, double k, double eps) const;

 private:
  Point project(std::size_t t, const Point& point) const;

  std::vector<std::vector<int>> tuples_;
  std::vector<std::map<Point, Stats>> stats_;
  int evaluations_ = 0;
};

struct NtbeaOptions {
  int budget = 1000;       // fitness evaluations
  double k = 1.0;          // exploration weight
  double mutation = 0.2;   // per-dimension mutation probability
  int neighbours = 50;
  double epsilon = 1e-6;   // guards the exploration term
};

struct NtbeaResult {
  Point best;
  double estimate = 0;
  std::vector<Point> evaluated;   // in evaluation order
  std::vector<double> fitness;
};

/// Noisy fitness of a point; `seed` differs for every call.
using Evaluator = std::function<double(const Point&, std::uint64_t seed)>;

/// Neighbour of `point`: each dimension re-drawn to a different value with
/// probability `mutation`, and at least one dimension always changes when
/// any dimension has more than one value.
Point mutate_point(const Point& point, const std::vector<int>& cardinalities, double mutation,
                   Rng& rng);

NtbeaResult ntbea_run(const std::vector<int>& cardinalities, const Evaluator& evaluate,
                      const NtbeaOptions& options, std::uint64_t seed);

}  // namespace spl
