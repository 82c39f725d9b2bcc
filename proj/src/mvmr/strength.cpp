#include "mvmr/strength.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "mvmr/errors.hpp"
#include "mvmr/linalg.hpp"
#include "mvmr/log.hpp"

namespace mvmr {

namespace {

Matrix gamma_matrix(const Dataset& data) {
  Matrix g(static_cast<Index>(data.p()), data.k());
  for (std::size_t j = 0; j < data.p(); ++j) {
    g.row(static_cast<Index>(j)) = data.snp(j).gamma_hat.transpose();
  }
  return g;
}

Matrix se_matrix(const Dataset& data) {
  Matrix s(static_cast<Index>(data.p()), data.k());
  for (std::size_t j = 0; j < data.p(); ++j) {
    s.row(static_cast<Index>(j)) = data.snp(j).se_x.transpose();
  }
  return s;
}

}  // namespace

Matrix strength_matrix(const Matrix& gammas, const Matrix& se_x, const Matrix& shared_correlation) {
  if (gammas.rows() != se_x.rows() || gammas.cols() != se_x.cols() ||
      shared_correlation.rows() != gammas.cols()) {
    throw ValidationError("strength_matrix: dimension mismatch");
  }
  if ((se_x.array() <= 0.0).any()) {
    throw ValidationError("strength_matrix: standard errors must be positive");
  }
  const Matrix z = gammas.cwiseQuotient(se_x);
  const Matrix s = inverse_symmetric_sqrt(shared_correlation);
  Matrix out = s * (z.transpose() * z) * s;
  return 0.5 * (out + out.transpose());
}

StrengthReport sample_strength_matrix(const Dataset& data) {
  StrengthReport r;
  r.p = data.p();
  r.strength_matrix = strength_matrix(gamma_matrix(data), se_matrix(data), data.shared_correlation());
  r.strength_matrix.diagonal().array() -= static_cast<double>(r.p);
  Eigen::SelfAdjointEigenSolver<Matrix> es(r.strength_matrix, Eigen::EigenvaluesOnly);
  r.lambda_min = es.eigenvalues()(0);
  r.lambda_min_over_sqrt_p = r.lambda_min / std::sqrt(static_cast<double>(r.p));
  return r;
}

StrengthReport sample_strength(const Dataset& data) {
  StrengthReport r = sample_strength_matrix(data);
  const Matrix g = gamma_matrix(data);
  const Matrix se = se_matrix(data);
  r.conditional_f.resize(data.k());
  for (Index k = 0; k < data.k(); ++k) {
    r.conditional_f(k) = conditional_f(g, se, data.shared_correlation(), k);
  }
  return r;
}

double conditional_f(const Matrix& gammas, const Matrix& se_x, const Matrix& shared_correlation,
                     Index k) {
  const Index p = gammas.rows();
  const Index kk = gammas.cols();
  if (k < 0 || k >= kk) {
    throw ValidationError("conditional_f: exposure index out of range");
  }
  if (se_x.rows() != p || se_x.cols() != kk || shared_correlation.rows() != kk) {
    throw ValidationError("conditional_f: dimension mismatch");
  }
  if (p <= kk - 1) {
    throw InsufficientDataError("conditional_f needs p > K - 1");
  }

  Vector delta = Vector::Zero(kk);
  delta(k) = -1.0;
  if (kk > 1) {
    std::vector<Index> others;
    for (Index i = 0; i < kk; ++i) {
      if (i != k) others.push_back(i);
    }
    const Matrix x = gammas(Eigen::all, others);
    const Vector w = se_x.col(k).array().square().inverse();
    const Matrix xtwx = x.transpose() * w.asDiagonal() * x;
    const Vector xtwy = x.transpose() * w.asDiagonal() * gammas.col(k);

    Eigen::SelfAdjointEigenSolver<Matrix> es(xtwx);
    const Vector& ev = es.eigenvalues();
    const double cutoff = 1e-12 * std::max(ev.cwiseAbs().maxCoeff(), 0.0);
    Vector inv(ev.size());
    bool truncated = false;
    for (Index i = 0; i < ev.size(); ++i) {
      if (ev(i) > cutoff) {
        inv(i) = 1.0 / ev(i);
      } else {
        inv(i) = 0.0;
        truncated = true;
      }
    }
    if (truncated) {
      logger()->warn("conditional F for exposure {}: collinear exposure effects, using a "
                     "pseudoinverse",
                     k + 1);
    }
    const Vector coef =
        es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose() * xtwy;
    for (std::size_t i = 0; i < others.size(); ++i) {
      delta(others[i]) = coef(static_cast<Index>(i));
    }
  }

  double sum = 0.0;
  for (Index j = 0; j < p; ++j) {
    const Vector sd = se_x.row(j).transpose().cwiseProduct(delta);
    const double den = sd.dot(shared_correlation * sd);
    const double num = gammas.row(j).dot(delta);
    sum += num * num / den;
  }
  return sum / static_cast<double>(p - (kk - 1));
}

double conditional_f(const Dataset& data, Index k, const std::optional<Matrix>& true_gammas) {
  const Matrix se = se_matrix(data);
  if (true_gammas) {
    if (true_gammas->rows() != static_cast<Index>(data.p()) || true_gammas->cols() != data.k()) {
      throw ValidationError("conditional_f: true_gammas must be p x K");
    }
    return conditional_f(*true_gammas, se, data.shared_correlation(), k);
  }
  return conditional_f(gamma_matrix(data), se, data.shared_correlation(), k);
}

}  // namespace mvmr
