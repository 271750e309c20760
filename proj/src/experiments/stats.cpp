#include "spl/experiments/stats.hpp"

#include <algorithm>
#include <cmath>

namespace spl {

Rate make_rate(double successes, int n) {
  Rate r;
  r.n = n;
  if (n <= 0) return r;
  r.p = successes / n;
  r.se = std::sqrt(std::max(0.0, r.p * (1 - r.p)) / n);
  return r;
}

Moments moments(std::span<const int> values) {
  Moments m;
  m.n = static_cast<int>(values.size());
  if (values.empty()) return m;
  double sum = 0, sq = 0;
  m.min = m.max = values.front();
  for (int v : values) {
    sum += v;
    sq += static_cast<double>(v) * v;
    m.min = std::min<double>(m.min, v);
    m.max = std::max<double>(m.max, v);
  }
  m.mean = sum / m.n;
  m.sd = std::sqrt(std::max(0.0, sq / m.n - m.mean * m.mean));
  return m;
}

}  // namespace spl
