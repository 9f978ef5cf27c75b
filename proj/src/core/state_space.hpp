#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "rng.hpp"

namespace zisv {

// Random-walk state equation with heteroskedastic scalar observations:
//   x_t = x_{t-1} + N(0, state_var),            t = 1..T
//   y_t = x_t + obs_offset_t + N(0, obs_var_t)  where obs_present_t
// init_var = 0 conditions the path on x_0 = init_mean exactly (used by the
// Gibbs blocks, which sample x_0 separately); init_var > 0 places a prior
// on x_0 and includes it in the joint draw.
struct RwSsmSpec {
  int T = 0;
  Eigen::VectorXd obs_offset;         // length T
  Eigen::VectorXd obs_var;            // length T
  std::vector<uint8_t> obs_present;   // length T
  double state_var = 0.0;
  double init_mean = 0.0;
  double init_var = 0.0;
};

// Exact joint draw of x_{0:T} | y via forward filtering, backward sampling.
// Throws SamplerError if the filter produces non-finite quantities.
Eigen::VectorXd ffbs_draw(const RwSsmSpec& spec, const Eigen::VectorXd& obs, Rng& rng);

// Marginal posterior means E[x_t | y] (RTS smoother); the deterministic
// counterpart of ffbs_draw used for cross-checks.
Eigen::VectorXd ffbs_mean(const RwSsmSpec& spec, const Eigen::VectorXd& obs);

// Joint Gaussian over the stacked states x = (x_1', ..., x_T')', K per time,
// specified through its block-tridiagonal precision:
//   P = RW(trans_prec_1..T) + blockdiag(obs_prec_1..T),   b = linear
// where RW adds trans_prec_t couplings of the random-walk prior. The x_0
// term (trans_prec_1 * x_0, or the marginalized prior) is folded into
// trans_prec_1 / linear by the caller. The draw is N(P^{-1} b, P^{-1}).
struct BlockPrecisionSpec {
  int T = 0;
  int K = 0;
  std::vector<Eigen::MatrixXd> trans_prec;  // T blocks, K x K SPD
  std::vector<Eigen::MatrixXd> obs_prec;    // T blocks, K x K PSD
  Eigen::VectorXd linear;                   // length T*K
};

// Banded lower-Cholesky factorization and solves; bandwidth w means
// entries at |i - j| <= w. Storage is O(n * w).
class BandedCholesky {
 public:
  // Factorizes a symmetric banded matrix given by its lower band:
  // band(i, d) = A(i, i - d), d = 0..w. Throws SamplerError if not SPD.
  BandedCholesky(Eigen::MatrixXd band, int bandwidth);

  int rows() const { return static_cast<int>(band_.rows()); }
  int bandwidth() const { return w_; }
  size_t storage_bytes() const { return sizeof(double) * band_.size(); }

  Eigen::VectorXd solve_lower(const Eigen::VectorXd& b) const;   // L z = b
  Eigen::VectorXd solve_upper(const Eigen::VectorXd& b) const;   // L^T x = b
  Eigen::VectorXd solve(const Eigen::VectorXd& b) const;         // L L^T x = b

 private:
  Eigen::MatrixXd band_;  // n x (w+1), band_(i, d) = L(i, i-d)
  int w_;
};

// Exact draw from N(P^{-1} b, P^{-1}) via banded Cholesky; never forms a
// dense inverse. O(T K^3) time, O(T K^2) memory.
Eigen::VectorXd precision_draw(const BlockPrecisionSpec& spec, Rng& rng);

// Deterministic mean P^{-1} b of the same Gaussian.
Eigen::VectorXd precision_mean(const BlockPrecisionSpec& spec);

// Peak band storage (bytes) seen by any BandedCholesky since the last reset;
// instrumentation for the O(T K^2) memory contract.
size_t banded_peak_bytes();
void reset_banded_peak_bytes();

}  // namespace zisv
