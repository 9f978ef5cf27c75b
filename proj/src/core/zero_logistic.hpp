#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "rng.hpp"

namespace zisv {

// Numerically stable logistic function; the argument is clamped to +-700
// only inside the exponential, never in stored state.
double inv_logit(double x);

// Ternary zero indicator per time: 1 = exact zero observed, 0 = nonzero
// observed, -1 = missing.
using TernaryMask = std::vector<int8_t>;

// kappa_t = gamma_t - 1/2 at observed times (+1/2 at zeros, -1/2 at
// nonzeros); unused at missing times.
Eigen::VectorXd kappa_from_gamma(const TernaryMask& gamma);

// Independent PG(1, pi_t) draws at active (observed) times; inactive entries
// are left at zero and must not be read.
Eigen::VectorXd draw_omega(const Eigen::VectorXd& pi_path,
                           const std::vector<uint8_t>& active, Rng& rng);

// Joint draw of pi_{0:T} given the PG auxiliaries: pseudo-observations
// kappa_t / omega_t with variance 1 / omega_t at active times, random-walk
// prior with innovation variance sigma2_pi, conditioned on pi_0 when
// init_var = 0.
Eigen::VectorXd draw_pi_path(const Eigen::VectorXd& kappa,
                             const Eigen::VectorXd& omega,
                             const std::vector<uint8_t>& active, double sigma2_pi,
                             double init_mean, double init_var, Rng& rng);

// One omega-then-pi sweep: an exact Gibbs step for p(pi | gamma, priors).
// gamma = missing contributes no likelihood; pi_path[0] is conditioned on.
// Returns the updated path and writes the PG draws to omega.
Eigen::VectorXd gibbs_zero_sweep(const Eigen::VectorXd& pi_path,
                                 const TernaryMask& gamma, double sigma2_pi,
                                 Eigen::VectorXd& omega, Rng& rng);

}  // namespace zisv
