#include "spl/tuning/ntbea.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "spl/core/errors.hpp"

namespace spl {

TupleModel::TupleModel(int dims) {
  std::set<std::vector<int>> seen;
  auto track = [&](std::vector<int> t) {
    if (seen.insert(t).second) tuples_.push_back(std::move(t));
  };
  for (int i = 0; i < dims; ++i) track({i});
  for (int i = 0; i < dims; ++i)
    for (int j = i + 1; j < dims; ++j) track({i, j});
  std::vector<int> all(dims);
  for (int i = 0; i < dims; ++i) all[i] = i;
  if (dims > 0) track(all);
  stats_.resize(tuples_.size());
}

Point TupleModel::project(std::size_t t, const Point& point) const {
  Point key;
  key.reserve(tuples_[t].size());
  for (int d : tuples_[t]) key.push_back(point[d]);
  return key;
}

void TupleModel::add(const Point& point, double fitness) {
  for (std::size_t t = 0; t < tuples_.size(); ++t) {
    auto& s = stats_[t][project(t, point)];
    ++s.n;
    s.sum += fitness;
  }
  ++evaluations_;
}

TupleModel::Stats TupleModel::stats(std::size_t t, const Point& point) const {
  auto it = stats_[t].find(project(t, point));
  return it == stats_[t].end() ? Stats{} : it->second;
}

double TupleModel::estimate(const Point& point) const {
  double total = 0;
  for (std::size_t t = 0; t < tuples_.size(); ++t) {
    auto s = stats(t, point);
    if (s.n) total += s.sum / s.n;
  }
  return tuples_.empty() ? 0.0 : total / tuples_.size();
}

double TupleModel::score(const Point& point, double k, double eps) const {
  const double log_n = std::log(evaluations_ + 1.0);
  double total = 0;
  for (std::size_t t = 0; t < tuples_.size(); ++t) {
    auto s = stats(t, point);
    const double exploit = s.n ? s.sum / s.n : k * std::sqrt(log_n);
    total += exploit + k * std::sqrt(log_n / (s.n + eps));
  }
  return tuples_.empty() ? 0.0 : total / tuples_.size();
}

Point mutate_point(const Point& point, const std::vector<int>& cardinalities, double mutation,
                   Rng& rng) {
  Point out = point;
  std::vector<int> mutable_dims;
  for (std::size_t i = 0; i < cardinalities.size(); ++i)
    if (cardinalities[i] > 1) mutable_dims.push_back(static_cast<int>(i));
  if (mutable_dims.empty()) return out;

  auto redraw = [&](int d) {
    // Uniform over the other values.
    int v = static_cast<int>(rng.below(cardinalities[d] - 1));
    out[d] = v >= point[d] ? v + 1 : v;
  };
  bool changed = false;
  for (int d : mutable_dims) {
    if (rng.bernoulli(mutation)) {
      redraw(d);
      changed = true;
    }
  }
  if (!changed) redraw(mutable_dims[rng.below(mutable_dims.size())]);
  return out;
}

NtbeaResult ntbea_run(const std::vector<int>& cardinalities, const Evaluator& evaluate,
                      const NtbeaOptions& options, std::uint64_t seed) {
  if (options.budget < 1) throw UsageError("NTBEA budget must be >= 1");
  if (cardinalities.empty()) throw UsageError("NTBEA needs at least one dimension");
  for (int c : cardinalities)
    if (c < 1) throw UsageError("every dimension needs at least one value");

  Rng rng(seed);
  TupleModel model(static_cast<int>(cardinalities.size()));
  NtbeaResult result;

  Point current(cardinalities.size());
  for (std::size_t i = 0; i < current.size(); ++i)
    current[i] = static_cast<int>(rng.below(cardinalities[i]));

  for (int it = 0; it < options.budget; ++it) {
    const double f = evaluate(current, mix_seed(seed, static_cast<std::uint64_t>(it)));
    model.add(current, f);
    result.evaluated.push_back(current);
    result.fitness.push_back(f);
    if (it + 1 == options.budget) break;

    std::set<Point> seen;
    Point next = current;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < options.neighbours; ++i) {
      Point cand = mutate_point(current, cardinalities, options.mutation, rng);
      if (!seen.insert(cand).second) continue;
      const double s = model.score(cand, options.k, options.epsilon);
      if (s > best) {
        best = s;
        next = std::move(cand);
      }
    }
    current = std::move(next);
  }

  std::set<Point> seen;
  bool first = true;
  for (const auto& p : result.evaluated) {
    if (!seen.insert(p).second) continue;
    const double e = model.estimate(p);
    if (first || e > result.estimate) {
      result.best = p;
      result.estimate = e;
      first = false;
    }
  }
  return result;
}

}  // namespace spl
