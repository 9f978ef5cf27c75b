#include "zero_logistic.hpp"

#include <cmath>

#include "errors.hpp"
#include "polya_gamma.hpp"
#include "state_space.hpp"

namespace zisv {

double inv_logit(double x) {
  const double z = std::clamp(x, -700.0, 700.0);
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

Eigen::VectorXd kappa_from_gamma(const TernaryMask& gamma) {
  Eigen::VectorXd kappa = Eigen::VectorXd::Zero(gamma.size());
  for (size_t t = 0; t < gamma.size(); ++t) {
    if (gamma[t] < 0) continue;
    kappa[t] = gamma[t] == 1 ? 0.5 : -0.5;
  }
  return kappa;
}

Eigen::VectorXd draw_omega(const Eigen::VectorXd& pi_path,
                           const std::vector<uint8_t>& active, Rng& rng) {
  const int T = static_cast<int>(active.size());
  if (pi_path.size() != T + 1) throw UsageError("draw_omega: length mismatch");
  Eigen::VectorXd omega = Eigen::VectorXd::Zero(T);
  for (int t = 0; t < T; ++t) {
    if (active[t]) omega[t] = draw_pg1(pi_path[t + 1], rng);
  }
  return omega;
}

Eigen::VectorXd draw_pi_path(const Eigen::VectorXd& kappa,
                             const Eigen::VectorXd& omega,
                             const std::vector<uint8_t>& active, double sigma2_pi,
                             double init_mean, double init_var, Rng& rng) {
  const int T = static_cast<int>(active.size());
  if (kappa.size() != T || omega.size() != T) {
    throw UsageError("draw_pi_path: length mismatch");
  }
  RwSsmSpec spec;
  spec.T = T;
  spec.state_var = sigma2_pi;
  spec.init_mean = init_mean;
  spec.init_var = init_var;
  spec.obs_offset = Eigen::VectorXd::Zero(T);
  spec.obs_var.resize(T);
  spec.obs_present.assign(active.begin(), active.end());
  Eigen::VectorXd obs = Eigen::VectorXd::Zero(T);
  for (int t = 0; t < T; ++t) {
    if (!active[t]) {
      spec.obs_var[t] = 1.0;
      continue;
    }
    if (!(omega[t] > 0.0)) throw SamplerError("draw_pi_path: omega must be > 0");
    spec.obs_var[t] = 1.0 / omega[t];
    obs[t] = kappa[t] / omega[t];
  }
  return ffbs_draw(spec, obs, rng);
}

Eigen::VectorXd gibbs_zero_sweep(const Eigen::VectorXd& pi_path,
                                 const TernaryMask& gamma, double sigma2_pi,
                                 Eigen::VectorXd& omega, Rng& rng) {
  const int T = static_cast<int>(gamma.size());
  if (pi_path.size() != T + 1) throw UsageError("gibbs_zero_sweep: length mismatch");
  std::vector<uint8_t> active(T);
  for (int t = 0; t < T; ++t) active[t] = gamma[t] >= 0;
  omega = draw_omega(pi_path, active, rng);
  const Eigen::VectorXd kappa = kappa_from_gamma(gamma);
  return draw_pi_path(kappa, omega, active, sigma2_pi, pi_path[0], 0.0, rng);
}

}  // namespace zisv
