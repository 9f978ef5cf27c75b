#pragma once

#include <Eigen/Dense>

#include "errors.hpp"

namespace zisv {

enum class Mode { ZeroInflated, Plain };

struct McmcSchedule {
  int total_iters = 12000;
  int burn_in = 2000;
  int thin = 20;

  int stored() const { return (total_iters - burn_in) / thin; }

  void validate() const {
    if (total_iters < 1 || burn_in < 0 || thin < 1 || burn_in >= total_iters) {
      throw UsageError("mcmc schedule: need 0 <= burn_in < total_iters, thin >= 1");
    }
  }
};

// Priors and constants of the univariate model. Defaults follow the
// reference configuration: theta_0 ~ N(0, 10), h_0 and pi_0 ~ N(0, 1),
// IG(11, 1) innovations for theta and pi, IG(101, 1) for h.
struct UniHyper {
  double mu_theta0 = 0.0, var_theta0 = 10.0;
  double mu_h0 = 0.0, var_h0 = 1.0;
  double mu_pi0 = 0.0, var_pi0 = 1.0;
  double alpha_theta = 11.0, beta_theta = 1.0;
  double alpha_h = 101.0, beta_h = 1.0;
  double alpha_pi = 11.0, beta_pi = 1.0;
  double offset_c = 1e-4;

  void validate() const {
    if (!(var_theta0 > 0 && var_h0 > 0 && var_pi0 > 0)) {
      throw UsageError("hyper: initial-state variances must be > 0");
    }
    if (!(alpha_theta > 0 && beta_theta > 0 && alpha_h > 0 && beta_h > 0 &&
          alpha_pi > 0 && beta_pi > 0)) {
      throw UsageError("hyper: IG shapes and rates must be > 0");
    }
    if (!(offset_c > 0)) throw UsageError("hyper: offset_c must be > 0");
  }
};

enum class CPriorMean { Zero, Identity };

// Multivariate model priors. Unset matrix-valued entries resolve from K:
// nu_pi = 2K, S_pi = s_pi_scale * I, V_k = v_c_scale * I with the default
// v_c_scale = K^{-3.5}.
struct MvHyper {
  double mu_theta0 = 0.0, var_theta0 = 10.0;
  double mu_h0 = 0.0, var_h0 = 1.0;
  double mu_pi0 = 0.0, var_pi0 = 1.0;
  double alpha_theta = 11.0, beta_theta = 1.0;
  double alpha_h = 101.0, beta_h = 1.0;
  double nu_pi = 0.0;  // 0 -> 2K
  double s_pi_scale = 1.0;
  Eigen::MatrixXd s_pi;  // empty -> s_pi_scale * I
  CPriorMean c_prior_mean = CPriorMean::Zero;
  double v_c_scale = 0.0;  // 0 -> K^{-3.5}
  double offset_c = 1e-4;

  // Diagnostic fixes: hold C or Sigma_pi at a given value instead of
  // sampling them.
  Eigen::MatrixXd fixed_c;         // empty -> sample C
  Eigen::MatrixXd fixed_sigma_pi;  // empty -> sample Sigma_pi
};

// MvHyper with every K-dependent default made concrete.
struct MvHyperResolved {
  int K = 0;
  double mu_theta0, var_theta0, mu_h0, var_h0, mu_pi0, var_pi0;
  double alpha_theta, beta_theta, alpha_h, beta_h;
  double nu_pi;
  Eigen::MatrixXd s_pi;
  Eigen::MatrixXd m_c;  // K x K, row k is the prior mean of C_{k,:}
  double v_c;           // common row prior variance scale: V_k = v_c * I
  double offset_c;
  bool fix_c = false;
  Eigen::MatrixXd fixed_c;
  bool fix_sigma_pi = false;
  Eigen::MatrixXd fixed_sigma_pi;
};

MvHyperResolved resolve_mv_hyper(const MvHyper& h, int K);

}  // namespace zisv
