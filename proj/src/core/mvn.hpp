#pragma once

#include <Eigen/Dense>

#include "rng.hpp"

namespace zisv {

enum class MvnMode { Covariance, Precision };

// Exact Gaussian draw. In precision mode the matrix is the precision P and
// the draw solves L^T u = z with P = L L^T; P^{-1} is never formed.
// Throws SamplerError if the Cholesky factorization fails.
Eigen::VectorXd draw_mvn(const Eigen::VectorXd& mean, const Eigen::MatrixXd& mat,
                         MvnMode mode, Rng& rng);

struct InvWishartParams {
  double nu;              // degrees of freedom, > K - 1
  Eigen::MatrixXd scale;  // K x K SPD
};

// Inverse-Wishart draw via the Bartlett decomposition of the Wishart dual.
// Output is symmetric positive definite by construction.
Eigen::MatrixXd draw_inv_wishart(const InvWishartParams& p, Rng& rng);

}  // namespace zisv
