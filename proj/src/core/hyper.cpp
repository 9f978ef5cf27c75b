#include "hyper.hpp"

#include <cmath>

namespace zisv {

MvHyperResolved resolve_mv_hyper(const MvHyper& h, int K) {
  if (K < 1) throw UsageError("resolve_mv_hyper: K must be >= 1");
  MvHyperResolved r;
  r.K = K;
  r.mu_theta0 = h.mu_theta0;
  r.var_theta0 = h.var_theta0;
  r.mu_h0 = h.mu_h0;
  r.var_h0 = h.var_h0;
  r.mu_pi0 = h.mu_pi0;
  r.var_pi0 = h.var_pi0;
  r.alpha_theta = h.alpha_theta;
  r.beta_theta = h.beta_theta;
  r.alpha_h = h.alpha_h;
  r.beta_h = h.beta_h;
  r.nu_pi = h.nu_pi > 0 ? h.nu_pi : 2.0 * K;
  if (!(r.nu_pi > K - 1)) throw UsageError("hyper: need nu_pi > K - 1");
  r.s_pi = h.s_pi.size() > 0
               ? h.s_pi
               : Eigen::MatrixXd(h.s_pi_scale * Eigen::MatrixXd::Identity(K, K));
  if (r.s_pi.rows() != K || r.s_pi.cols() != K) {
    throw UsageError("hyper: s_pi must be K x K");
  }
  r.m_c = h.c_prior_mean == CPriorMean::Identity
              ? Eigen::MatrixXd(Eigen::MatrixXd::Identity(K, K))
              : Eigen::MatrixXd(Eigen::MatrixXd::Zero(K, K));
  r.v_c = h.v_c_scale > 0 ? h.v_c_scale : std::pow(static_cast<double>(K), -3.5);
  r.offset_c = h.offset_c;
  if (!(r.offset_c > 0)) throw UsageError("hyper: offset_c must be > 0");
  if (!(r.var_theta0 > 0 && r.var_h0 > 0 && r.var_pi0 > 0)) {
    throw UsageError("hyper: initial-state variances must be > 0");
  }
  if (!(r.alpha_theta > 0 && r.beta_theta > 0 && r.alpha_h > 0 && r.beta_h > 0)) {
    throw UsageError("hyper: IG shapes and rates must be > 0");
  }
  r.fix_c = h.fixed_c.size() > 0;
  if (r.fix_c) {
    if (h.fixed_c.rows() != K || h.fixed_c.cols() != K) {
      throw UsageError("hyper: fixed_c must be K x K");
    }
    r.fixed_c = h.fixed_c;
  }
  r.fix_sigma_pi = h.fixed_sigma_pi.size() > 0;
  if (r.fix_sigma_pi) {
    if (h.fixed_sigma_pi.rows() != K || h.fixed_sigma_pi.cols() != K) {
      throw UsageError("hyper: fixed_sigma_pi must be K x K");
    }
    r.fixed_sigma_pi = h.fixed_sigma_pi;
  }
  return r;
}

}  // namespace zisv
