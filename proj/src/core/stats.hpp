#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace zisv {

inline double mean_of(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

inline double variance_of(const std::vector<double>& x) {
  if (x.size() < 2) return 0.0;
  const double m = mean_of(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

// Monte-Carlo standard error of the mean of a (possibly autocorrelated)
// sequence via non-overlapping batch means.
inline double batch_means_se(const std::vector<double>& x, int batches = 0) {
  const int n = static_cast<int>(x.size());
  if (n < 4) return std::sqrt(variance_of(x) / std::max(n, 1));
  int b = batches > 0 ? batches : static_cast<int>(std::floor(std::sqrt(n)));
  b = std::clamp(b, 2, n / 2);
  const int len = n / b;
  std::vector<double> bm(b);
  for (int i = 0; i < b; ++i) {
    double s = 0.0;
    for (int j = 0; j < len; ++j) s += x[i * len + j];
    bm[i] = s / len;
  }
  return std::sqrt(variance_of(bm) / b);
}

// Median with averaging of the two central order statistics at even counts.
inline double median_of(std::vector<double> x) {
  const size_t n = x.size();
  if (n == 0) return 0.0;
  std::sort(x.begin(), x.end());
  if (n % 2 == 1) return x[n / 2];
  return 0.5 * (x[n / 2 - 1] + x[n / 2]);
}

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

// Central beta% interval by symmetric order statistics: with alpha =
// (1 - beta/100) / 2 the bounds are x_(k) and x_(n+1-k), k = ceil(alpha(n+1))
// clamped to [1, floor((n+1)/2)]. beta -> 100 spans min..max.
inline Interval central_interval(std::vector<double> x, double beta_percent) {
  Interval iv;
  const int n = static_cast<int>(x.size());
  if (n == 0) return iv;
  std::sort(x.begin(), x.end());
  const double alpha = 0.5 * (1.0 - beta_percent / 100.0);
  int k = static_cast<int>(std::ceil(alpha * (n + 1)));
  k = std::clamp(k, 1, (n + 1) / 2);
  iv.lower = x[k - 1];
  iv.upper = x[n - k];
  return iv;
}

}  // namespace zisv
