#include "zucsv.hpp"

#include <cmath>
#include <sstream>

#include "state_space.hpp"
#include "sv_mixture.hpp"

namespace zisv {

namespace {

double conjugate_initial(double mu0, double var0, double next, double trans_var,
                         Rng& rng) {
  const double prec = 1.0 / var0 + 1.0 / trans_var;
  const double mean = (mu0 / var0 + next / trans_var) / prec;
  return mean + rng.normal() / std::sqrt(prec);
}

double rw_sum_squares(const Eigen::VectorXd& path) {
  double ss = 0.0;
  for (Eigen::Index t = 1; t < path.size(); ++t) {
    const double d = path[t] - path[t - 1];
    ss += d * d;
  }
  return ss;
}

}  // namespace

void draw_initial_states(UniChainState& s, const UniHyper& h, Mode mode, Rng& rng) {
  s.theta[0] = conjugate_initial(h.mu_theta0, h.var_theta0, s.theta[1],
                                 s.sigma2_theta, rng);
  s.h[0] = conjugate_initial(h.mu_h0, h.var_h0, s.h[1], s.sigma2_h, rng);
  if (mode == Mode::ZeroInflated) {
    s.pi[0] = conjugate_initial(h.mu_pi0, h.var_pi0, s.pi[1], s.sigma2_pi, rng);
  }
}

void draw_static_variances(UniChainState& s, const UniHyper& h, Mode mode, Rng& rng,
                           bool mutate_for_testing) {
  const double halfT = 0.5 * static_cast<double>(s.theta.size() - 1);
  // Test fixture: a deliberately wrong theta update (sum of squares halved).
  const double theta_ss_scale = mutate_for_testing ? 0.25 : 0.5;
  s.sigma2_theta = rng.inv_gamma(h.alpha_theta + halfT,
                                 h.beta_theta + theta_ss_scale * rw_sum_squares(s.theta));
  s.sigma2_h =
      rng.inv_gamma(h.alpha_h + halfT, h.beta_h + 0.5 * rw_sum_squares(s.h));
  if (mode == Mode::ZeroInflated) {
    s.sigma2_pi =
        rng.inv_gamma(h.alpha_pi + halfT, h.beta_pi + 0.5 * rw_sum_squares(s.pi));
  }
}

void draw_trend(UniChainState& s, Rng& rng) {
  const int T = static_cast<int>(s.y_star.size());
  RwSsmSpec spec;
  spec.T = T;
  spec.state_var = s.sigma2_theta;
  spec.init_mean = s.theta[0];
  spec.init_var = 0.0;
  spec.obs_offset = Eigen::VectorXd::Zero(T);
  spec.obs_var.resize(T);
  spec.obs_present.assign(T, 1);
  for (int t = 0; t < T; ++t) spec.obs_var[t] = std::exp(s.h[t + 1]);
  s.theta = ffbs_draw(spec, s.y_star, rng);
}

void draw_sv(UniChainState& s, const UniHyper& h, Rng& rng) {
  const int T = static_cast<int>(s.y_star.size());
  Eigen::VectorXd lin(T);
  for (int t = 0; t < T; ++t) {
    lin[t] = sv_linearize(s.y_star[t] - s.theta[t + 1], h.offset_c);
  }
  const std::vector<uint8_t> active(T, 1);
  const MixtureTable& table = log_chi2_mixture();
  s.sv_indicator = draw_sv_indicators(lin, s.h, active, table, rng);
  s.h = draw_sv_path(lin, s.sv_indicator, active, table, s.sigma2_h, s.h[0], 0.0, rng);
}

void draw_zero_probs(UniChainState& s, const UniSeriesData& d, Rng& rng) {
  s.pi = gibbs_zero_sweep(s.pi, d.gamma, s.sigma2_pi, s.omega, rng);
}

void augment_y_star(UniChainState& s, const UniSeriesData& d, Mode mode, Rng& rng) {
  const int T = d.T();
  for (int t = 0; t < T; ++t) {
    const bool keep_observation =
        mode == Mode::Plain ? d.gamma[t] >= 0 : d.gamma[t] == 0;
    if (keep_observation) {
      s.y_star[t] = d.y[t];
    } else {
      s.y_star[t] = s.theta[t + 1] + std::exp(0.5 * s.h[t + 1]) * rng.normal();
    }
  }
}

UniChainState init_uni_state(const UniSeriesData& d, const UniHyper& h, Mode mode) {
  const int T = d.T();
  if (T < 2) throw UsageError("univariate chain: need T >= 2");
  UniChainState s;
  s.theta.setZero(T + 1);
  s.h.setZero(T + 1);
  s.pi.setZero(T + 1);
  s.y_star.setZero(T);
  s.sv_indicator.assign(T, 4);
  s.omega = Eigen::VectorXd::Constant(T, 0.25);

  // Trend: zero-imputed running mean of y.
  double run = 0.0;
  Eigen::VectorXd theta_init(T);
  for (int t = 0; t < T; ++t) {
    run += d.gamma[t] >= 0 ? d.y[t] : 0.0;
    theta_init[t] = run / (t + 1);
    s.theta[t + 1] = theta_init[t];
  }
  s.theta[0] = theta_init[0];

  // Volatility: log sample variance of observed nonzero values.
  double ss = 0.0, sum = 0.0;
  int n = 0;
  for (int t = 0; t < T; ++t) {
    if (d.gamma[t] == 0) {
      sum += d.y[t];
      ++n;
    }
  }
  double h0 = 0.0;
  if (n >= 2) {
    const double mean = sum / n;
    for (int t = 0; t < T; ++t) {
      if (d.gamma[t] == 0) ss += (d.y[t] - mean) * (d.y[t] - mean);
    }
    const double var = ss / (n - 1);
    if (var > 0) h0 = std::log(var);
  }
  s.h.setConstant(h0);

  // Zero log-odds: empirical logit of the zero fraction, clamped.
  int observed = 0, zeros = 0;
  for (int t = 0; t < T; ++t) {
    if (d.gamma[t] >= 0) {
      ++observed;
      zeros += d.gamma[t] == 1;
    }
  }
  double pi0 = 0.0;
  if (observed > 0) {
    const double frac = static_cast<double>(zeros) / observed;
    pi0 = std::clamp(std::log((frac + 1e-6) / (1.0 - frac + 1e-6)), -4.0, 4.0);
  }
  s.pi.setConstant(pi0);

  s.sigma2_theta = h.alpha_theta > 1 ? h.beta_theta / (h.alpha_theta - 1) : h.beta_theta;
  s.sigma2_h = h.alpha_h > 1 ? h.beta_h / (h.alpha_h - 1) : h.beta_h;
  s.sigma2_pi = h.alpha_pi > 1 ? h.beta_pi / (h.alpha_pi - 1) : h.beta_pi;

  for (int t = 0; t < T; ++t) {
    const bool keep = mode == Mode::Plain ? d.gamma[t] >= 0 : d.gamma[t] == 0;
    s.y_star[t] = keep ? d.y[t] : theta_init[t];
  }
  return s;
}

void uni_gibbs_sweep(UniChainState& s, const UniSeriesData& d, const UniHyper& h,
                     Mode mode, UniBlockRngs& rngs, bool mutate_for_testing) {
  const char* block = "";
  try {
    block = "initial_states";
    draw_initial_states(s, h, mode, rngs.init);
    block = "statics";
    draw_static_variances(s, h, mode, rngs.statics, mutate_for_testing);
    block = "trend";
    draw_trend(s, rngs.trend);
    block = "sv";
    draw_sv(s, h, rngs.sv);
    if (mode == Mode::ZeroInflated) {
      block = "zero";
      draw_zero_probs(s, d, rngs.zero);
    }
    block = "augment";
    augment_y_star(s, d, mode, rngs.augment);
  } catch (const SamplerError& e) {
    throw SamplerError(std::string(e.what()) + " [block " + block + "]");
  }
}

DrawStore run_uni_chain(const UniSeriesData& d, const UniHyper& h,
                        const McmcSchedule& sched, const UniRunOptions& opts) {
  h.validate();
  sched.validate();
  const int T = d.T();
  if (opts.mode == Mode::Plain && opts.strict_plain_zeros) {
    for (int t = 0; t < T; ++t) {
      if (d.gamma[t] == 1) {
        throw UsageError("plain mode (strict): data contain exact zeros");
      }
    }
  }
  UniChainState s = init_uni_state(d, h, opts.mode);
  UniBlockRngs rngs(opts.seed, opts.chain_index, opts.series_index);

  DrawStore store;
  store.T = T;
  store.K = 1;
  store.multivariate = false;
  store.mode = opts.mode;
  store.draws.reserve(sched.stored());
  for (int iter = 1; iter <= sched.total_iters; ++iter) {
    try {
      uni_gibbs_sweep(s, d, h, opts.mode, rngs);
    } catch (const SamplerError& e) {
      std::ostringstream msg;
      msg << e.what() << " [iteration " << iter << "]";
      throw SamplerError(msg.str());
    }
    if (iter > sched.burn_in && (iter - sched.burn_in) % sched.thin == 0) {
      ChainDraw draw;
      draw.iter = iter;
      draw.theta = s.theta;
      draw.h = s.h;
      draw.sigma2_theta = Eigen::VectorXd::Constant(1, s.sigma2_theta);
      draw.sigma2_h = Eigen::VectorXd::Constant(1, s.sigma2_h);
      if (opts.mode == Mode::ZeroInflated) {
        draw.pi = s.pi;
        draw.sigma2_pi = Eigen::VectorXd::Constant(1, s.sigma2_pi);
      }
      store.draws.push_back(std::move(draw));
    }
  }
  return store;
}

}  // namespace zisv
