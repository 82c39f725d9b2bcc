#include "mvmr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "mvmr/errors.hpp"

namespace mvmr {

namespace {

Eigen::SelfAdjointEigenSolver<Matrix> eigen_of(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw ValidationError("expected a square matrix");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success) {
    throw NotPsdError("eigendecomposition did not converge");
  }
  return es;
}

}  // namespace

Matrix symmetric_sqrt(const Matrix& a) {
  const auto es = eigen_of(a);
  Vector w = es.eigenvalues();
  const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  for (Index i = 0; i < w.size(); ++i) {
    if (w(i) < -1e-10 * scale) {
      throw NotPsdError("matrix is not positive semidefinite (eigenvalue " + std::to_string(w(i)) +
                        ")");
    }
    w(i) = std::sqrt(std::max(w(i), 0.0));
  }
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

Matrix inverse_symmetric_sqrt(const Matrix& a) {
  const auto es = eigen_of(a);
  const Vector& w = es.eigenvalues();
  if (w.minCoeff() <= 0.0) {
    throw NotPsdError("matrix is not positive definite");
  }
  const Vector inv = w.cwiseSqrt().cwiseInverse();
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

double relative_asymmetry(const Matrix& a) {
  const double scale = a.cwiseAbs().maxCoeff();
  if (scale == 0.0) {
    return 0.0;
  }
  return (a - a.transpose()).cwiseAbs().maxCoeff() / scale;
}

}  // namespace mvmr
