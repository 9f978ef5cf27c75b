#include "mvn.hpp"

#include <cmath>

#include "errors.hpp"

namespace zisv {

Eigen::VectorXd draw_mvn(const Eigen::VectorXd& mean, const Eigen::MatrixXd& mat,
                         MvnMode mode, Rng& rng) {
  const Eigen::Index k = mean.size();
  if (mat.rows() != k || mat.cols() != k) {
    throw UsageError("draw_mvn: dimension mismatch");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(mat);
  if (llt.info() != Eigen::Success) {
    throw SamplerError("draw_mvn: Cholesky failed (matrix not SPD)");
  }
  Eigen::VectorXd z(k);
  for (Eigen::Index i = 0; i < k; ++i) z[i] = rng.normal();
  if (mode == MvnMode::Covariance) {
    return mean + llt.matrixL() * z;
  }
  return mean + llt.matrixU().solve(z);
}

Eigen::MatrixXd draw_inv_wishart(const InvWishartParams& p, Rng& rng) {
  const Eigen::Index k = p.scale.rows();
  if (p.scale.cols() != k || k < 1) {
    throw UsageError("draw_inv_wishart: scale must be square");
  }
  if (!(p.nu > static_cast<double>(k) - 1.0)) {
    throw UsageError("draw_inv_wishart: need nu > K - 1");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(p.scale);
  if (llt.info() != Eigen::Success) {
    throw SamplerError("draw_inv_wishart: scale matrix not SPD");
  }
  const Eigen::MatrixXd ls = llt.matrixL();

  // Bartlett factor of Wishart(nu, I): lower triangular, chi draws on the
  // diagonal, standard normals below.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    a(i, i) = std::sqrt(2.0 * rng.gamma(0.5 * (p.nu - static_cast<double>(i))));
    for (Eigen::Index j = 0; j < i; ++j) a(i, j) = rng.normal();
  }

  // Sigma = (B A A^T B^T)^{-1} with B = Ls^{-T}; equivalently M^T M with
  // M = A^{-1} Ls^T, avoiding any explicit inverse of the scale.
  const Eigen::MatrixXd m = a.triangularView<Eigen::Lower>().solve(
      Eigen::MatrixXd(ls.transpose()));
  Eigen::MatrixXd sigma = m.transpose() * m;
  sigma = 0.5 * (sigma + sigma.transpose());
  return sigma;
}

}  // namespace zisv
