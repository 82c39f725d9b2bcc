#include "mvmr/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "mvmr/errors.hpp"
#include "mvmr/log.hpp"

namespace mvmr {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::mv_ivw: return "mv_ivw";
    case Method::srivw: return "srivw";
    case Method::srivw_pleiotropy: return "srivw_pleiotropy";
    case Method::srivw_overlap: return "srivw_overlap";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (auto m : {Method::mv_ivw, Method::srivw, Method::srivw_pleiotropy, Method::srivw_overlap}) {
    if (name == to_string(m)) return m;
  }
  if (name == "ivw") return Method::mv_ivw;
  throw ValidationError("unknown method '" + std::string(name) + "'");
}

Matrix Estimate::ci95() const {
  Matrix out(beta.size(), 2);
  out.col(0) = beta - kZ975 * se;
  out.col(1) = beta + kZ975 * se;
  return out;
}

SpectralFactor::SpectralFactor(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw ValidationError("spectral factorization needs a square matrix");
  }
  if (!a.allFinite()) {
    throw IllConditionedError("matrix has non-finite entries");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success) {
    throw IllConditionedError("eigendecomposition did not converge");
  }
  values_ = es.eigenvalues();
  vectors_ = es.eigenvectors();
}

void SpectralFactor::check(double phi) const {
  if (!(phi >= 0.0) || !std::isfinite(phi)) {
    throw ValidationError("phi must be a finite nonnegative number");
  }
  if (phi > 0.0) {
    // Relative cutoff: the eigenvalues carry the units of the data.
    const double scale = values_.cwiseAbs().maxCoeff();
    if (scale == 0.0 || values_.cwiseAbs().minCoeff() <= 1e-12 * scale) {
      throw DegenerateSpectrumError("eigenvalue within 1e-12 (relative) of zero; R_phi is undefined");
    }
  }
}

Vector SpectralFactor::regularized_eigenvalues(double phi) const {
  check(phi);
  if (phi == 0.0) return values_;
  return values_ + phi * values_.cwiseInverse();
}

Matrix SpectralFactor::regularized(double phi) const {
  const Vector mu = regularized_eigenvalues(phi);
  return vectors_ * mu.asDiagonal() * vectors_.transpose();
}

Matrix SpectralFactor::regularized_inverse(double phi) const {
  check(phi);
  // (l + phi / l)^-1 = l / (l^2 + phi)
  const Vector inv = values_.array() / (values_.array().square() + phi);
  return vectors_ * inv.asDiagonal() * vectors_.transpose();
}

double SpectralFactor::regularized_condition(double phi) const {
  const Vector mu = regularized_eigenvalues(phi).cwiseAbs();
  const double lo = mu.minCoeff();
  return lo == 0.0 ? std::numeric_limits<double>::infinity() : mu.maxCoeff() / lo;
}

Matrix spectral_regularize(const Matrix& a, double phi) {
  if (phi == 0.0) return a;
  return SpectralFactor(a).regularized(phi);
}

namespace {

void check_shapes(const Instruments& data) {
  const Index p = data.p();
  const Index k = data.k();
  if (k < 1) throw ValidationError("no exposures");
  if (data.gamma_y_hat.size() != p || data.se_y.size() != p ||
      static_cast<Index>(data.sigma_x.size()) != p) {
    throw ValidationError("inconsistent SNP counts in instrument data");
  }
  if (p < k) {
    throw ValidationError("p = " + std::to_string(p) + " SNPs is fewer than K = " +
                          std::to_string(k) + " exposures");
  }
  if (p == k) {
    logger()->warn("p = K = {}: the model is exactly identified", k);
  }
  if (data.cov_xy && (data.cov_xy->rows() != p || data.cov_xy->cols() != k)) {
    throw ValidationError("cov_xy must be p x K");
  }
}

Estimate finish(const Matrix& r_inv, const Matrix& middle, Vector beta, double phi, Method method,
                Index p) {
  Estimate e;
  Matrix cov = r_inv * middle * r_inv;
  e.covariance = 0.5 * (cov + cov.transpose());
  e.se = e.covariance.diagonal().cwiseMax(0.0).cwiseSqrt();
  e.beta = std::move(beta);
  e.phi = phi;
  e.method = method;
  e.p_used = static_cast<std::size_t>(p);
  return e;
}

}  // namespace

Matrix variance_middle(const Instruments& data, const Vector& beta, double tau2, bool overlap) {
  const Index k = data.k();
  if (overlap && !data.cov_xy) {
    throw ValidationError("overlap variance needs cov_xy for every SNP");
  }
  Matrix mid = Matrix::Zero(k, k);
  Vector wj = Vector::Zero(k);
  for (Index j = 0; j < data.p(); ++j) {
    const double w = 1.0 / (data.se_y(j) * data.se_y(j));
    const Vector g = data.gamma_hat.row(j).transpose();
    const Matrix m = (g * w) * g.transpose();
    const Vector vb = (data.sigma_x[static_cast<std::size_t>(j)] * w) * beta;
    if (overlap) wj = data.cov_xy->row(j).transpose() * w;
    const double bw = beta.dot(wj);
    const double scale = 1.0 + tau2 * w + beta.dot(vb) - 2.0 * bw;
    mid += scale * m + vb * vb.transpose() - vb * wj.transpose() - wj * vb.transpose() +
           (1.0 + 4.0 * bw) * (wj * wj.transpose());
  }
  return 0.5 * (mid + mid.transpose());
}

SrivwSystem::SrivwSystem(const Instruments& data, bool overlap)
    : data_(&data),
      overlap_(overlap),
      moment_(Matrix::Zero(data.k(), data.k())),
      noise_(Matrix::Zero(data.k(), data.k())),
      numerator_(Vector::Zero(data.k())),
      factor_([&] {
        check_shapes(data);
        if (overlap && !data.cov_xy) {
          throw ValidationError("srivw_overlap requires cov_xy for every SNP");
        }
        const Index k = data.k();
        Matrix moment = Matrix::Zero(k, k);
        Matrix noise = Matrix::Zero(k, k);
        for (Index j = 0; j < data.p(); ++j) {
          const double w = 1.0 / (data.se_y(j) * data.se_y(j));
          const Vector g = data.gamma_hat.row(j).transpose();
          moment += (g * w) * g.transpose();
          noise += data.sigma_x[static_cast<std::size_t>(j)] * w;
        }
        moment = 0.5 * (moment + moment.transpose()).eval();
        noise = 0.5 * (noise + noise.transpose()).eval();
        moment_ = moment;
        noise_ = noise;
        return SpectralFactor(moment - noise);
      }()) {
  const Index k = data.k();
  Vector c = Vector::Zero(k);
  for (Index j = 0; j < data.p(); ++j) {
    const double w = 1.0 / (data.se_y(j) * data.se_y(j));
    if (overlap_) c = data.cov_xy->row(j).transpose();
    numerator_ += (data.gamma_hat.row(j).transpose() * data.gamma_y_hat(j) - c) * w;
  }
}

Vector SrivwSystem::beta(double phi) const {
  const double cond = factor_.regularized_condition(phi);
  if (!(cond < kConditionLimit)) {
    throw IllConditionedError("R_phi(sum M_j - V_j) is numerically singular at phi = " +
                              std::to_string(phi) + " (condition number " + std::to_string(cond) +
                              "); try a larger phi");
  }
  return factor_.regularized_inverse(phi) * numerator_;
}

Estimate SrivwSystem::estimate(double phi, Method method) const {
  if (method == Method::mv_ivw) {
    throw ValidationError("SrivwSystem cannot produce MV-IVW estimates");
  }
  if ((method == Method::srivw_overlap) != overlap_) {
    throw ValidationError("method does not match the overlap setting of this system");
  }
  Vector b = beta(phi);
  double tau2 = 0.0;
  std::optional<double> raw;
  if (method == Method::srivw_pleiotropy) {
    raw = estimate_tau2_raw(*data_, b);
    tau2 = std::max(*raw, 0.0);
  }
  const Matrix mid = variance_middle(*data_, b, tau2, overlap_);
  Estimate e = finish(factor_.regularized_inverse(phi), mid, std::move(b), phi, method, data_->p());
  if (raw) {
    e.tau2 = tau2;
    e.tau2_raw = raw;
  }
  return e;
}

Estimate mv_ivw(const Instruments& data) {
  check_shapes(data);
  const Index k = data.k();
  Matrix moment = Matrix::Zero(k, k);
  Vector numerator = Vector::Zero(k);
  const Vector c = Vector::Zero(k);
  for (Index j = 0; j < data.p(); ++j) {
    const double w = 1.0 / (data.se_y(j) * data.se_y(j));
    const Vector g = data.gamma_hat.row(j).transpose();
    moment += (g * w) * g.transpose();
    numerator += (g * data.gamma_y_hat(j) - c) * w;
  }
  moment = 0.5 * (moment + moment.transpose()).eval();
  const SpectralFactor factor(moment);
  const double cond = factor.regularized_condition(0.0);
  if (!(cond < kConditionLimit)) {
    throw IllConditionedError("MV-IVW denominator is ill-conditioned (condition number " +
                              std::to_string(cond) + "); consider SRIVW");
  }
  const Matrix inv = factor.regularized_inverse(0.0);
  Vector beta = inv * numerator;
  const Matrix mid = variance_middle(data, beta, 0.0, false);
  return finish(inv, mid, std::move(beta), 0.0, Method::mv_ivw, data.p());
}

Estimate mv_ivw(const Dataset& data) { return mv_ivw(to_instruments(data)); }

Estimate srivw(const Instruments& data, double phi) {
  return SrivwSystem(data, false).estimate(phi, Method::srivw);
}

Estimate srivw(const Dataset& data, double phi) { return srivw(to_instruments(data), phi); }

double estimate_tau2_raw(const Instruments& data, const Vector& beta) {
  if (beta.size() != data.k()) {
    throw ValidationError("beta has the wrong length");
  }
  double num = 0.0;
  double den = 0.0;
  for (Index j = 0; j < data.p(); ++j) {
    const double s2 = data.se_y(j) * data.se_y(j);
    const double w = 1.0 / s2;
    const double r = data.gamma_y_hat(j) - data.gamma_hat.row(j).dot(beta);
    const double bsb = beta.dot(data.sigma_x[static_cast<std::size_t>(j)] * beta);
    num += (r * r - s2 - bsb) * w;
    den += w;
  }
  return num / den;
}

double estimate_tau2(const Instruments& data, const Vector& beta) {
  const double raw = estimate_tau2_raw(data, beta);
  logger()->debug("raw tau^2 estimate {}", raw);
  return std::max(raw, 0.0);
}

double estimate_tau2(const Dataset& data, const Vector& beta) {
  return estimate_tau2(to_instruments(data), beta);
}

Estimate srivw_pleiotropy(const Instruments& data, double phi) {
  return SrivwSystem(data, false).estimate(phi, Method::srivw_pleiotropy);
}

Estimate srivw_pleiotropy(const Dataset& data, double phi) {
  return srivw_pleiotropy(to_instruments(data), phi);
}

Estimate srivw_overlap(const Instruments& data, double phi) {
  return SrivwSystem(data, true).estimate(phi, Method::srivw_overlap);
}

Estimate srivw_overlap(const Dataset& data, double phi) {
  if (!data.has_cov_xy()) {
    throw ValidationError("srivw_overlap requires cov_xy for every SNP");
  }
  return srivw_overlap(to_instruments(data), phi);
}

}  // namespace mvmr
