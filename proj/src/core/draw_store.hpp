#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hyper.hpp"

namespace zisv {

// One thinned post-burn-in Gibbs draw. Univariate chains use K = 1;
// fields that a model variant does not have are size 0.
struct ChainDraw {
  int iter = 0;                  // 1-based Gibbs iteration the draw came from
  Eigen::MatrixXd theta;         // (T+1) x K
  Eigen::MatrixXd h;             // (T+1) x K
  Eigen::MatrixXd pi;            // (T+1) x K, zero-inflated modes only
  Eigen::VectorXd sigma2_theta;  // K
  Eigen::VectorXd sigma2_h;      // K
  Eigen::VectorXd sigma2_pi;     // univariate zero-inflated mode, length 1
  Eigen::MatrixXd c;             // K x K, multivariate only
  Eigen::MatrixXd sigma_pi;      // K x K, multivariate zero-inflated mode
};

struct DrawStore {
  int T = 0;
  int K = 0;
  bool multivariate = false;
  Mode mode = Mode::ZeroInflated;
  std::vector<ChainDraw> draws;
};

// Long-format CSV. Univariate stores write
//   iter,block,name,t_index,value
// and multivariate stores add a series column before value. Matrix-valued
// statics use t_index for the row and series for the column; scalar statics
// use t_index = -1.
void write_draw_store_csv(const DrawStore& store, const std::string& path);
DrawStore read_draw_store_csv(const std::string& path);

}  // namespace zisv
