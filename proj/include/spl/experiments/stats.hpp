#pragma once

#include <span>

namespace spl {

/// Proportion with binomial standard error sqrt(p(1-p)/n).
struct Rate {
  double p = 0;
  double se = 0;
  int n = 0;
};

Rate make_rate(double successes, int n);

struct Moments {
  double mean = 0;
  double sd = 0;  // population standard deviation
  double min = 0;
  double max = 0;
  int n = 0;
};

Moments moments(std::span<const int> values);

}  // namespace spl
