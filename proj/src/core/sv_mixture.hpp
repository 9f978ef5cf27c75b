#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "rng.hpp"

namespace zisv {

// Ten-component Normal mixture approximating the log chi^2_1 distribution
// (the Omori-Chib-Shephard-Nakajima table).
struct MixtureComponent {
  double weight;
  double mean;
  double var;
};

struct MixtureTable {
  std::array<MixtureComponent, 10> comp;

  int size() const { return static_cast<int>(comp.size()); }
};

const MixtureTable& log_chi2_mixture();

// log(residual^2 + offset); the auxiliary-mixture linearization of the SV
// measurement equation.
inline double sv_linearize(double residual, double offset_c) {
  return std::log(residual * residual + offset_c);
}

// One mixture indicator per active time, drawn with posterior probability
// proportional to weight_j * N(lin_obs_t | h_t + mean_j, var_j).
// Inactive times keep indicator 0 (unused).
std::vector<int> draw_sv_indicators(const Eigen::VectorXd& lin_obs,
                                    const Eigen::VectorXd& h_path,
                                    const std::vector<uint8_t>& active,
                                    const MixtureTable& table, Rng& rng);

// Joint draw of h_{0:T} given indicators, conditioned on h_0 (init_var = 0)
// or under an initial prior; delegates to the random-walk FFBS kernel.
Eigen::VectorXd draw_sv_path(const Eigen::VectorXd& lin_obs,
                             const std::vector<int>& indicators,
                             const std::vector<uint8_t>& active,
                             const MixtureTable& table, double sigma2_h,
                             double init_mean, double init_var, Rng& rng);

}  // namespace zisv
