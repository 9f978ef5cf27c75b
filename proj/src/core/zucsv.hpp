#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "draw_store.hpp"
#include "hyper.hpp"
#include "rng.hpp"
#include "zero_logistic.hpp"

namespace zisv {

// One series of a panel: observed values plus the ternary zero mask
// (1 zero, 0 nonzero, -1 missing). Values at missing entries are ignored.
struct UniSeriesData {
  Eigen::VectorXd y;
  TernaryMask gamma;

  int T() const { return static_cast<int>(y.size()); }
};

struct UniChainState {
  Eigen::VectorXd theta, h, pi;  // length T+1, index 0 is the initial state
  Eigen::VectorXd y_star;        // length T, entry t-1 is time t
  double sigma2_theta = 0.0, sigma2_h = 0.0, sigma2_pi = 0.0;
  std::vector<int> sv_indicator;  // length T
  Eigen::VectorXd omega;          // length T, PG auxiliaries at observed times
};

// Gibbs block stream ids within a chain; combined with make_stream.
enum BlockId : uint64_t {
  kBlockInit = 0,
  kBlockStatics = 1,
  kBlockTrend = 2,
  kBlockSv = 3,
  kBlockZero = 4,
  kBlockZeroPath = 5,
  kBlockAugment = 6,
  kBlockImpact = 7,
};

struct UniBlockRngs {
  Rng init, statics, trend, sv, zero, augment;

  UniBlockRngs(uint64_t seed, uint64_t chain, uint64_t series)
      : init(seed, make_stream(chain, kBlockInit, series)),
        statics(seed, make_stream(chain, kBlockStatics, series)),
        trend(seed, make_stream(chain, kBlockTrend, series)),
        sv(seed, make_stream(chain, kBlockSv, series)),
        zero(seed, make_stream(chain, kBlockZero, series)),
        augment(seed, make_stream(chain, kBlockAugment, series)) {}
};

// Individual Gibbs blocks, exposed for the unit tests and the Geweke
// harness. Each is an exact draw from the stated full conditional.
void draw_initial_states(UniChainState& s, const UniHyper& h, Mode mode, Rng& rng);
void draw_static_variances(UniChainState& s, const UniHyper& h, Mode mode, Rng& rng,
                           bool mutate_for_testing = false);
void draw_trend(UniChainState& s, Rng& rng);
void draw_sv(UniChainState& s, const UniHyper& h, Rng& rng);
void draw_zero_probs(UniChainState& s, const UniSeriesData& d, Rng& rng);
void augment_y_star(UniChainState& s, const UniSeriesData& d, Mode mode, Rng& rng);

UniChainState init_uni_state(const UniSeriesData& d, const UniHyper& h, Mode mode);

// One full sweep in the fixed block order: initial states, static
// variances, trend, volatility, zero probabilities, data augmentation.
// Plain mode skips the zero blocks and augments only missing entries.
void uni_gibbs_sweep(UniChainState& s, const UniSeriesData& d, const UniHyper& h,
                     Mode mode, UniBlockRngs& rngs, bool mutate_for_testing = false);

struct UniRunOptions {
  Mode mode = Mode::ZeroInflated;
  uint64_t seed = 0;
  uint64_t chain_index = 0;
  uint64_t series_index = 0;
  bool strict_plain_zeros = false;  // plain mode: error on exact zeros
};

DrawStore run_uni_chain(const UniSeriesData& d, const UniHyper& h,
                        const McmcSchedule& sched, const UniRunOptions& opts);

}  // namespace zisv
