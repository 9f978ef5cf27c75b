#include "polya_gamma.hpp"

#include <cmath>

namespace zisv {

namespace {

constexpr double kTrunc = 0.64;
constexpr double kTruncInv = 1.0 / kTrunc;

// n-th alternating-series coefficient a_n(x) of the J*(1, 0) density.
double series_coef(int n, double x) {
  const double k = (n + 0.5) * M_PI;
  if (x > kTrunc) {
    return k * std::exp(-0.5 * k * k * x);
  }
  if (x > 0.0) {
    const double expnt = -1.5 * (std::log(0.5 * M_PI) + std::log(x)) +
                         std::log(k) - 2.0 * (n + 0.5) * (n + 0.5) / x;
    return std::exp(expnt);
  }
  return 0.0;
}

// Probability that the proposal falls in the truncated-exponential tail
// rather than the inverse-Gaussian body, computed in log space.
double tail_mass(double z) {
  const double t = kTrunc;
  const double fz = 0.125 * M_PI * M_PI + 0.5 * z * z;
  const double b = std::sqrt(1.0 / t) * (t * z - 1.0);
  const double a = -std::sqrt(1.0 / t) * (t * z + 1.0);
  const double x0 = std::log(fz) + fz * t;
  const double xb = x0 - z + log_norm_cdf(b);
  const double xa = x0 + z + log_norm_cdf(a);
  const double qdivp = 4.0 / M_PI * (std::exp(xb) + std::exp(xa));
  return 1.0 / (1.0 + qdivp);
}

// Inverse-Gaussian IG(1/z, 1) truncated to (0, kTrunc].
double rtigauss(double z, Rng& rng) {
  z = std::fabs(z);
  const double t = kTrunc;
  double x = t + 1.0;
  if (kTruncInv > z) {
    // Mean exceeds the truncation point: rejection from a chi-based proposal.
    double alpha = 0.0;
    do {
      double e1, e2;
      do {
        e1 = rng.exponential();
        e2 = rng.exponential();
      } while (e1 * e1 > 2.0 * e2 / t);
      x = 1.0 + e1 * t;
      x = t / (x * x);
      alpha = std::exp(-0.5 * z * z * x);
    } while (rng.uniform() > alpha);
  } else {
    const double mu = 1.0 / z;
    do {
      double y = rng.normal();
      y *= y;
      const double half_mu = 0.5 * mu;
      const double mu_y = mu * y;
      x = mu + half_mu * mu_y - half_mu * std::sqrt(4.0 * mu_y + mu_y * mu_y);
      if (rng.uniform() > mu / (mu + x)) x = mu * mu / x;
    } while (x > t);
  }
  return x;
}

}  // namespace

double draw_pg1(double c, Rng& rng) {
  const double z = 0.5 * std::fabs(c);
  const double fz = 0.125 * M_PI * M_PI + 0.5 * z * z;
  for (;;) {
    double x;
    if (rng.uniform() < tail_mass(z)) {
      x = kTrunc + rng.exponential() / fz;
    } else {
      x = rtigauss(z, rng);
    }
    double s = series_coef(0, x);
    const double y = rng.uniform() * s;
    int n = 0;
    for (;;) {
      ++n;
      if (n % 2 == 1) {
        s -= series_coef(n, x);
        if (y <= s) return 0.25 * x;
      } else {
        s += series_coef(n, x);
        if (y > s) break;
      }
    }
  }
}

double pg1_mean(double c) {
  const double z = std::fabs(c);
  if (z < 1e-8) return 0.25;
  return std::tanh(0.5 * z) / (2.0 * z);
}

}  // namespace zisv
