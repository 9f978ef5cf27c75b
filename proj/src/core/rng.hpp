#pragma once

#include <cstdint>

namespace zisv {

// pcg64 (XSL-RR 128/64). Streams are selected through the LCG increment, so
// any two distinct stream ids give independent sequences without
// coordination between owners.
class Pcg64 {
 public:
  Pcg64(uint64_t seed, uint64_t stream);

  uint64_t next_u64();

 private:
  using u128 = unsigned __int128;
  u128 state_;
  u128 inc_;
};

// Stream layout used across the engine:
//   stream = chain_index * 2^16 + block_index
// where block_index packs (gibbs block, series) as block * 256 + series.
inline constexpr uint64_t kChainStreamStride = uint64_t{1} << 16;

inline uint64_t make_stream(uint64_t chain, uint64_t block, uint64_t series = 0) {
  return chain * kChainStreamStride + block * 256 + series;
}

// Standard-normal quantile (Wichura's PPND16), |error| < 1e-15 over (0,1).
double norm_ppf(double p);
// Standard-normal cdf and its log, stable into the far left tail.
double norm_cdf(double x);
double log_norm_cdf(double x);

// Single-owner random stream plus the scalar distributions used by the
// samplers. Never shared between threads; parallelism splits streams instead.
class Rng {
 public:
  Rng(uint64_t seed, uint64_t stream) : gen_(seed, stream) {}

  uint64_t next_u64() { return gen_.next_u64(); }

  // Strictly inside (0, 1).
  double uniform() {
    return static_cast<double>(gen_.next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

  double normal() { return norm_ppf(uniform()); }
  double normal(double mean, double sd) { return mean + sd * normal(); }

  double exponential();                      // rate 1
  double gamma(double shape);                // scale 1
  double gamma(double shape, double scale) { return scale * gamma(shape); }

  // Density ∝ x^{-(alpha+1)} exp(-beta/x). Throws UsageError on bad params.
  double inv_gamma(double alpha, double beta);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  Pcg64 gen_;
};

}  // namespace zisv
