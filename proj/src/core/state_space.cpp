#include "state_space.hpp"

#include <atomic>
#include <cmath>

#include "errors.hpp"

namespace zisv {

namespace {

std::atomic<size_t> g_banded_peak{0};

void validate(const RwSsmSpec& spec, const Eigen::VectorXd& obs) {
  if (spec.T < 0) throw UsageError("rw ssm: negative horizon");
  if (spec.obs_offset.size() != spec.T || spec.obs_var.size() != spec.T ||
      static_cast<int>(spec.obs_present.size()) != spec.T || obs.size() != spec.T) {
    throw UsageError("rw ssm: length mismatch");
  }
  if (!(spec.state_var > 0.0)) throw UsageError("rw ssm: state_var must be > 0");
  if (spec.init_var < 0.0) throw UsageError("rw ssm: init_var must be >= 0");
  for (int t = 0; t < spec.T; ++t) {
    if (spec.obs_present[t]) {
      if (!(spec.obs_var[t] > 0.0)) throw UsageError("rw ssm: obs_var must be > 0");
      if (!std::isfinite(obs[t])) throw SamplerError("rw ssm: non-finite observation");
    }
  }
}

struct Filter {
  Eigen::VectorXd mean;  // filtered means m_0..m_T
  Eigen::VectorXd var;   // filtered variances v_0..v_T
};

Filter forward_filter(const RwSsmSpec& spec, const Eigen::VectorXd& obs) {
  Filter f;
  f.mean.resize(spec.T + 1);
  f.var.resize(spec.T + 1);
  f.mean[0] = spec.init_mean;
  f.var[0] = spec.init_var;
  const double q = spec.state_var;
  for (int t = 1; t <= spec.T; ++t) {
    const double mp = f.mean[t - 1];
    const double vp = f.var[t - 1] + q;
    if (spec.obs_present[t - 1]) {
      const double r = spec.obs_var[t - 1];
      const double gain = vp / (vp + r);
      f.mean[t] = mp + gain * (obs[t - 1] - spec.obs_offset[t - 1] - mp);
      f.var[t] = std::max(vp * (1.0 - gain), 1e-300);
    } else {
      f.mean[t] = mp;
      f.var[t] = vp;
    }
    if (!std::isfinite(f.mean[t]) || !std::isfinite(f.var[t])) {
      throw SamplerError("rw ssm: filter produced non-finite state");
    }
  }
  return f;
}

}  // namespace

Eigen::VectorXd ffbs_draw(const RwSsmSpec& spec, const Eigen::VectorXd& obs, Rng& rng) {
  validate(spec, obs);
  const Filter f = forward_filter(spec, obs);
  const double q = spec.state_var;
  Eigen::VectorXd path(spec.T + 1);
  path[spec.T] = f.mean[spec.T] + std::sqrt(f.var[spec.T]) * rng.normal();
  for (int t = spec.T - 1; t >= 0; --t) {
    // x_t | x_{t+1}, y_{1:t}; written so v_t = 0 degrades to conditioning.
    const double denom = f.var[t] + q;
    const double mean = (f.mean[t] * q + path[t + 1] * f.var[t]) / denom;
    const double var = f.var[t] * q / denom;
    path[t] = mean + std::sqrt(var) * rng.normal();
  }
  if (!path.allFinite()) throw SamplerError("rw ssm: non-finite sampled path");
  return path;
}

Eigen::VectorXd ffbs_mean(const RwSsmSpec& spec, const Eigen::VectorXd& obs) {
  validate(spec, obs);
  const Filter f = forward_filter(spec, obs);
  const double q = spec.state_var;
  Eigen::VectorXd smoothed(spec.T + 1);
  smoothed[spec.T] = f.mean[spec.T];
  for (int t = spec.T - 1; t >= 0; --t) {
    const double gain = f.var[t] / (f.var[t] + q);
    smoothed[t] = f.mean[t] + gain * (smoothed[t + 1] - f.mean[t]);
  }
  return smoothed;
}

BandedCholesky::BandedCholesky(Eigen::MatrixXd band, int bandwidth)
    : band_(std::move(band)), w_(bandwidth) {
  const int n = static_cast<int>(band_.rows());
  if (band_.cols() != w_ + 1) throw UsageError("banded cholesky: bad band shape");
  size_t bytes = storage_bytes();
  size_t prev = g_banded_peak.load(std::memory_order_relaxed);
  while (prev < bytes &&
         !g_banded_peak.compare_exchange_weak(prev, bytes, std::memory_order_relaxed)) {
  }
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - w_);
    for (int j = lo; j < i; ++j) {
      double s = band_(i, i - j);
      for (int k = std::max(lo, j - w_); k < j; ++k) {
        s -= band_(i, i - k) * band_(j, j - k);
      }
      band_(i, i - j) = s / band_(j, 0);
    }
    double s = band_(i, 0);
    for (int k = lo; k < i; ++k) s -= band_(i, i - k) * band_(i, i - k);
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw SamplerError("banded cholesky: matrix not SPD");
    }
    band_(i, 0) = std::sqrt(s);
  }
}

Eigen::VectorXd BandedCholesky::solve_lower(const Eigen::VectorXd& b) const {
  const int n = rows();
  Eigen::VectorXd x = b;
  for (int i = 0; i < n; ++i) {
    double s = x[i];
    for (int k = std::max(0, i - w_); k < i; ++k) s -= band_(i, i - k) * x[k];
    x[i] = s / band_(i, 0);
  }
  return x;
}

Eigen::VectorXd BandedCholesky::solve_upper(const Eigen::VectorXd& b) const {
  const int n = rows();
  Eigen::VectorXd x = b;
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    const int hi = std::min(n - 1, i + w_);
    for (int k = i + 1; k <= hi; ++k) s -= band_(k, k - i) * x[k];
    x[i] = s / band_(i, 0);
  }
  return x;
}

Eigen::VectorXd BandedCholesky::solve(const Eigen::VectorXd& b) const {
  return solve_upper(solve_lower(b));
}

namespace {

void validate(const BlockPrecisionSpec& spec) {
  if (spec.T < 1 || spec.K < 1) throw UsageError("precision spec: T, K must be >= 1");
  if (static_cast<int>(spec.trans_prec.size()) != spec.T ||
      static_cast<int>(spec.obs_prec.size()) != spec.T ||
      spec.linear.size() != static_cast<Eigen::Index>(spec.T) * spec.K) {
    throw UsageError("precision spec: length mismatch");
  }
  for (int t = 0; t < spec.T; ++t) {
    if (spec.trans_prec[t].rows() != spec.K || spec.trans_prec[t].cols() != spec.K ||
        spec.obs_prec[t].rows() != spec.K || spec.obs_prec[t].cols() != spec.K) {
      throw UsageError("precision spec: block shape mismatch");
    }
  }
}

// Assemble the block-tridiagonal precision into lower-band storage.
BandedCholesky factor(const BlockPrecisionSpec& spec) {
  const int T = spec.T;
  const int K = spec.K;
  const int n = T * K;
  const int w = 2 * K - 1;
  Eigen::MatrixXd band = Eigen::MatrixXd::Zero(n, w + 1);
  for (int t = 0; t < T; ++t) {
    Eigen::MatrixXd diag = spec.trans_prec[t] + spec.obs_prec[t];
    if (t + 1 < T) diag += spec.trans_prec[t + 1];
    for (int a = 0; a < K; ++a) {
      for (int b = 0; b <= a; ++b) {
        band(t * K + a, a - b) = diag(a, b);
      }
    }
    if (t + 1 < T) {
      // Block (t+1, t) = -trans_prec[t+1].
      for (int a = 0; a < K; ++a) {
        for (int b = 0; b < K; ++b) {
          band((t + 1) * K + a, K + a - b) = -spec.trans_prec[t + 1](a, b);
        }
      }
    }
  }
  return BandedCholesky(std::move(band), w);
}

}  // namespace

Eigen::VectorXd precision_draw(const BlockPrecisionSpec& spec, Rng& rng) {
  validate(spec);
  const BandedCholesky chol = factor(spec);
  Eigen::VectorXd z(spec.linear.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.normal();
  return chol.solve(spec.linear) + chol.solve_upper(z);
}

Eigen::VectorXd precision_mean(const BlockPrecisionSpec& spec) {
  validate(spec);
  return factor(spec).solve(spec.linear);
}

size_t banded_peak_bytes() { return g_banded_peak.load(std::memory_order_relaxed); }

void reset_banded_peak_bytes() { g_banded_peak.store(0, std::memory_order_relaxed); }

}  // namespace zisv
