#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "zero_logistic.hpp"

namespace zisv {

// Real-valued T x K panel with explicit missingness. Values under the
// missing mask carry no information and are never read. Immutable once
// built; shareable read-only across threads.
struct Panel {
  Eigen::MatrixXd values;              // T x K
  Eigen::Matrix<uint8_t, Eigen::Dynamic, Eigen::Dynamic> missing;  // T x K
  std::vector<std::string> series_names;  // K
  std::vector<std::string> time_labels;   // T
  Eigen::VectorXd scale_factors;          // K, > 0; unscaled = values * factor

  int rows() const { return static_cast<int>(values.rows()); }
  int cols() const { return static_cast<int>(values.cols()); }
};

// Ternary zero/nonzero/missing mask per cell.
struct ZeroMask {
  std::vector<TernaryMask> gamma;  // K masks of length T

  const TernaryMask& series(int k) const { return gamma[k]; }
};

struct PanelLoadOptions {
  char delimiter = ',';
};

// Parses a CSV with one leading time-label column and K numeric columns;
// empty cells mean missing. Throws UsageError on malformed input, non-numeric
// cells, fewer than 2 data rows, duplicate or non-increasing time labels, or
// a series with no observed values.
Panel load_panel(const std::string& path, const PanelLoadOptions& opts = {});
Panel parse_panel_csv(const std::string& text, const PanelLoadOptions& opts = {});

// Divides each series by its sample SD over non-missing entries (zeros
// included, n-1 denominator) so every series has sample SD 1; the divisors
// multiply into scale_factors. Exact zeros stay exact zeros. Throws
// UsageError for a series with fewer than 2 observations or zero variance.
Panel scale_to_common_sd(const Panel& panel);

// Deterministic ternary mask: zero iff the observed value is exactly 0.
ZeroMask derive_zero_mask(const Panel& panel);

// Sample SD over a series' non-missing entries (n-1 denominator).
double sample_sd(const Panel& panel, int k);

void write_scale_factors_csv(const Panel& panel, const std::string& path);

}  // namespace zisv
