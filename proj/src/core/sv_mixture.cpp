#include "sv_mixture.hpp"

#include <cmath>

#include "errors.hpp"
#include "state_space.hpp"

namespace zisv {

const MixtureTable& log_chi2_mixture() {
  static const MixtureTable table{{{
      {0.00609, 1.92677, 0.11265},
      {0.04775, 1.34744, 0.17788},
      {0.13057, 0.73504, 0.26768},
      {0.20674, 0.02266, 0.40611},
      {0.22715, -0.85173, 0.62699},
      {0.18842, -1.97278, 0.98583},
      {0.12047, -3.46788, 1.57469},
      {0.05591, -5.55246, 2.54498},
      {0.01575, -8.68384, 4.16591},
      {0.00115, -14.65000, 7.33342},
  }}};
  return table;
}

std::vector<int> draw_sv_indicators(const Eigen::VectorXd& lin_obs,
                                    const Eigen::VectorXd& h_path,
                                    const std::vector<uint8_t>& active,
                                    const MixtureTable& table, Rng& rng) {
  const int T = static_cast<int>(lin_obs.size());
  if (h_path.size() != T + 1 || static_cast<int>(active.size()) != T) {
    throw UsageError("sv indicators: length mismatch");
  }
  const int m = table.size();
  std::vector<double> logp(m);
  std::vector<int> out(T, 0);
  for (int t = 0; t < T; ++t) {
    if (!active[t]) continue;
    double maxlp = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < m; ++j) {
      const auto& c = table.comp[j];
      const double resid = lin_obs[t] - h_path[t + 1] - c.mean;
      logp[j] = std::log(c.weight) - 0.5 * std::log(c.var) -
                0.5 * resid * resid / c.var;
      maxlp = std::max(maxlp, logp[j]);
    }
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      logp[j] = std::exp(logp[j] - maxlp);
      total += logp[j];
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
      throw SamplerError("sv indicators: component probabilities underflowed");
    }
    const double u = rng.uniform() * total;
    double acc = 0.0;
    int pick = m - 1;
    for (int j = 0; j < m; ++j) {
      acc += logp[j];
      if (u <= acc) {
        pick = j;
        break;
      }
    }
    out[t] = pick;
  }
  return out;
}

Eigen::VectorXd draw_sv_path(const Eigen::VectorXd& lin_obs,
                             const std::vector<int>& indicators,
                             const std::vector<uint8_t>& active,
                             const MixtureTable& table, double sigma2_h,
                             double init_mean, double init_var, Rng& rng) {
  const int T = static_cast<int>(lin_obs.size());
  RwSsmSpec spec;
  spec.T = T;
  spec.state_var = sigma2_h;
  spec.init_mean = init_mean;
  spec.init_var = init_var;
  spec.obs_offset.resize(T);
  spec.obs_var.resize(T);
  spec.obs_present.assign(active.begin(), active.end());
  for (int t = 0; t < T; ++t) {
    if (!active[t]) {
      spec.obs_offset[t] = 0.0;
      spec.obs_var[t] = 1.0;
      continue;
    }
    const auto& c = table.comp[indicators[t]];
    spec.obs_offset[t] = c.mean;
    spec.obs_var[t] = c.var;
  }
  return ffbs_draw(spec, lin_obs, rng);
}

}  // namespace zisv
