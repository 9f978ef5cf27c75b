#include "panel.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "errors.hpp"

namespace zisv {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, delim)) out.push_back(trim(field));
  if (!line.empty() && line.back() == delim) out.push_back("");
  return out;
}

double parse_cell(const std::string& cell, int row, int col) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end == cell.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << "non-numeric cell '" << cell << "' at data row " << row + 1
        << ", column " << col + 1;
    throw UsageError(msg.str());
  }
  return v;
}

bool all_numeric(const std::vector<std::string>& labels) {
  for (const auto& s : labels) {
    char* end = nullptr;
    errno = 0;
    std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || errno == ERANGE) return false;
  }
  return true;
}

void check_time_order(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& s : labels) {
    if (!seen.insert(s).second) {
      throw UsageError("duplicate time label '" + s + "'");
    }
  }
  // Numeric labels compare numerically, otherwise lexicographically
  // (fixed-width labels like 1999Q3 sort correctly either way).
  if (all_numeric(labels)) {
    for (size_t i = 1; i < labels.size(); ++i) {
      if (!(std::strtod(labels[i - 1].c_str(), nullptr) <
            std::strtod(labels[i].c_str(), nullptr))) {
        throw UsageError("time labels not strictly increasing at '" + labels[i] + "'");
      }
    }
  } else {
    for (size_t i = 1; i < labels.size(); ++i) {
      if (!(labels[i - 1] < labels[i])) {
        throw UsageError("time labels not strictly increasing at '" + labels[i] + "'");
      }
    }
  }
}

}  // namespace

Panel parse_panel_csv(const std::string& text, const PanelLoadOptions& opts) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split_line(line, opts.delimiter));
  }
  if (rows.empty()) throw UsageError("empty CSV");
  const auto& header = rows.front();
  if (header.size() < 2) throw UsageError("CSV needs a time column and at least one series");
  const int k = static_cast<int>(header.size()) - 1;
  const int t = static_cast<int>(rows.size()) - 1;
  if (t < 2) throw UsageError("fewer than 2 rows");

  Panel panel;
  panel.series_names.assign(header.begin() + 1, header.end());
  panel.values.setZero(t, k);
  panel.missing.setZero(t, k);
  panel.time_labels.reserve(t);
  for (int i = 0; i < t; ++i) {
    const auto& row = rows[i + 1];
    if (static_cast<int>(row.size()) != k + 1) {
      std::ostringstream msg;
      msg << "malformed CSV: data row " << i + 1 << " has " << row.size()
          << " fields, expected " << k + 1;
      throw UsageError(msg.str());
    }
    if (row[0].empty()) throw UsageError("empty time label");
    panel.time_labels.push_back(row[0]);
    for (int j = 0; j < k; ++j) {
      const std::string& cell = row[j + 1];
      if (cell.empty()) {
        panel.missing(i, j) = 1;
      } else {
        panel.values(i, j) = parse_cell(cell, i, j);
      }
    }
  }
  check_time_order(panel.time_labels);
  for (int j = 0; j < k; ++j) {
    bool any = false;
    for (int i = 0; i < t; ++i) any = any || !panel.missing(i, j);
    if (!any) {
      throw UsageError("series '" + panel.series_names[j] + "' entirely missing");
    }
  }
  panel.scale_factors = Eigen::VectorXd::Ones(k);
  return panel;
}

Panel load_panel(const std::string& path, const PanelLoadOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_panel_csv(buf.str(), opts);
}

double sample_sd(const Panel& panel, int k) {
  double sum = 0.0;
  int n = 0;
  for (int t = 0; t < panel.rows(); ++t) {
    if (!panel.missing(t, k)) {
      sum += panel.values(t, k);
      ++n;
    }
  }
  if (n < 2) {
    throw UsageError("series '" + panel.series_names[k] +
                     "' has fewer than 2 observations");
  }
  const double mean = sum / n;
  double ss = 0.0;
  for (int t = 0; t < panel.rows(); ++t) {
    if (!panel.missing(t, k)) {
      const double d = panel.values(t, k) - mean;
      ss += d * d;
    }
  }
  return std::sqrt(ss / (n - 1));
}

Panel scale_to_common_sd(const Panel& panel) {
  Panel out = panel;
  for (int k = 0; k < panel.cols(); ++k) {
    const double sd = sample_sd(panel, k);
    if (!(sd > 0.0)) {
      throw UsageError("series '" + panel.series_names[k] +
                       "' has zero variance; cannot scale");
    }
    for (int t = 0; t < panel.rows(); ++t) {
      if (!out.missing(t, k) && out.values(t, k) != 0.0) {
        out.values(t, k) /= sd;
      }
    }
    out.scale_factors[k] = panel.scale_factors[k] * sd;
  }
  return out;
}

ZeroMask derive_zero_mask(const Panel& panel) {
  ZeroMask mask;
  mask.gamma.resize(panel.cols());
  for (int k = 0; k < panel.cols(); ++k) {
    mask.gamma[k].assign(panel.rows(), 0);
    for (int t = 0; t < panel.rows(); ++t) {
      if (panel.missing(t, k)) {
        mask.gamma[k][t] = -1;
      } else {
        mask.gamma[k][t] = panel.values(t, k) == 0.0 ? 1 : 0;
      }
    }
  }
  return mask;
}

void write_scale_factors_csv(const Panel& panel, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << "series,scale_factor\n";
  char buf[64];
  for (int k = 0; k < panel.cols(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.17g", panel.scale_factors[k]);
    out << panel.series_names[k] << "," << buf << "\n";
  }
}

}  // namespace zisv
