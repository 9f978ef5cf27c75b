#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "draw_store.hpp"
#include "hyper.hpp"
#include "rng.hpp"
#include "zero_logistic.hpp"
#include "zucsv.hpp"

namespace zisv {

// Multivariate panel slice handed to the sampler: values plus per-series
// ternary masks (1 zero, 0 nonzero, -1 missing).
struct MvPanelData {
  Eigen::MatrixXd y;               // T x K
  std::vector<TernaryMask> gamma;  // K masks of length T

  int T() const { return static_cast<int>(y.rows()); }
  int K() const { return static_cast<int>(y.cols()); }
};

struct MvChainState {
  Eigen::MatrixXd theta, h, pi;  // (T+1) x K
  Eigen::MatrixXd y_star;        // T x K
  Eigen::MatrixXd c;             // K x K impact matrix, |det| > 0
  Eigen::MatrixXd sigma_pi;      // K x K SPD
  Eigen::VectorXd sigma2_theta, sigma2_h;   // K
  std::vector<std::vector<int>> sv_indicator;  // K vectors of length T
  Eigen::MatrixXd omega;         // T x K
  double det_c = 1.0;
};

struct MvBlockRngs {
  Rng init, statics, trend, zero_path, augment, impact;
  std::vector<Rng> sv;    // per series
  std::vector<Rng> zero;  // per series, PG draws

  MvBlockRngs(uint64_t seed, uint64_t chain, int K)
      : init(seed, make_stream(chain, kBlockInit)),
        statics(seed, make_stream(chain, kBlockStatics)),
        trend(seed, make_stream(chain, kBlockTrend)),
        zero_path(seed, make_stream(chain, kBlockZeroPath)),
        augment(seed, make_stream(chain, kBlockAugment)),
        impact(seed, make_stream(chain, kBlockImpact)) {
    for (int k = 0; k < K; ++k) {
      sv.emplace_back(seed, make_stream(chain, kBlockSv, k));
      zero.emplace_back(seed, make_stream(chain, kBlockZero, k));
    }
  }
};

// Observation precision C^T diag(exp(-h_t)) C, the inverse of
// Sigma_t = C^{-1} diag(exp(h_t)) C^{-T}, formed without inverting C.
Eigen::MatrixXd obs_precision_at_t(const Eigen::MatrixXd& c,
                                   const Eigen::VectorXd& h_t);

// Scalar draw from the density proportional to |r|^power *
// exp(-(r - m)^2 / (2 s^2)), by numerical inverse-CDF on the two sign
// branches. power = 0 degrades to N(m, s^2).
double draw_abs_power_normal(int power, double m, double s, Rng& rng);

void draw_initial_states_mv(MvChainState& s, const MvHyperResolved& h, Mode mode,
                            Rng& rng);
void draw_static_variances_mv(MvChainState& s, const MvHyperResolved& h, Mode mode,
                              Rng& rng, bool mutate_for_testing = false);
void draw_trend_mv(MvChainState& s, Rng& rng);
void draw_sv_mv(MvChainState& s, const MvHyperResolved& h, std::vector<Rng>& rngs);
void draw_zero_mv(MvChainState& s, const MvPanelData& d, std::vector<Rng>& omega_rngs,
                  Rng& path_rng);
void draw_sigma_pi(MvChainState& s, const MvHyperResolved& h, Rng& rng);
void augment_y_star_mv(MvChainState& s, const MvPanelData& d, Mode mode, Rng& rng);
// Row-wise Gibbs update of the impact matrix C; retries a row draw up to 8
// times if |det C| falls below 1e-12, then aborts the iteration.
void draw_impact_matrix(MvChainState& s, const MvHyperResolved& h, Rng& rng);

MvChainState init_mv_state(const MvPanelData& d, const MvHyperResolved& h, Mode mode);

void mv_gibbs_sweep(MvChainState& s, const MvPanelData& d, const MvHyperResolved& h,
                    Mode mode, MvBlockRngs& rngs, bool mutate_for_testing = false);

struct MvRunOptions {
  Mode mode = Mode::ZeroInflated;
  uint64_t seed = 0;
  uint64_t chain_index = 0;
  bool strict_plain_zeros = false;
};

DrawStore run_mv_chain(const MvPanelData& d, const MvHyper& h,
                       const McmcSchedule& sched, const MvRunOptions& opts);

}  // namespace zisv
