#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "mvmr/summary_data.hpp"
#include "mvmr/types.hpp"

namespace mvmr {

enum class Method { mv_ivw, srivw, srivw_pleiotropy, srivw_overlap };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

struct Estimate {
  Vector beta;
  Matrix covariance;
  Vector se;
  double phi = 0.0;
  std::optional<double> tau2;
  std::optional<double> tau2_raw;
  Method method = Method::mv_ivw;
  std::size_t p_used = 0;

  // K x 2 matrix of normal-approximation 95% limits.
  Matrix ci95() const;
};

inline constexpr double kZ975 = 1.959963984540054;
inline constexpr double kConditionLimit = 1e12;

// Eigendecomposition of a symmetric matrix A, shared by R_phi(A) and its
// inverse. R_phi(A) = A + phi A^-1 maps each eigenvalue l to l + phi / l.
class SpectralFactor {
 public:
  explicit SpectralFactor(const Matrix& a);

  const Vector& eigenvalues() const { return values_; }
  const Matrix& eigenvectors() const { return vectors_; }

  Vector regularized_eigenvalues(double phi) const;
  Matrix regularized(double phi) const;
  Matrix regularized_inverse(double phi) const;
  double regularized_condition(double phi) const;

 private:
  void check(double phi) const;

  Vector values_;
  Matrix vectors_;
};

Matrix spectral_regularize(const Matrix& a, double phi);

// Precomputed sums for the SRIVW family on one dataset. The plain estimator
// is the overlap estimator with Sigma_XYj = 0, evaluated on the same code
// path so the two agree bit for bit when cov_xy is zero.
class SrivwSystem {
 public:
  SrivwSystem(const Instruments& data, bool overlap);

  const Instruments& data() const { return *data_; }
  bool overlap() const { return overlap_; }
  const Matrix& moment() const { return moment_; }       // sum M_j
  const Matrix& noise() const { return noise_; }         // sum V_j
  const Vector& numerator() const { return numerator_; } // sum (g G - S_XY) / s2
  const SpectralFactor& factor() const { return factor_; }

  Vector beta(double phi) const;
  Estimate estimate(double phi, Method method) const;

 private:
  const Instruments* data_;
  bool overlap_;
  Matrix moment_;
  Matrix noise_;
  Vector numerator_;
  SpectralFactor factor_;
};

// Middle matrix of the sandwich variance. tau2 = 0 and overlap = false give
// the plain bracket sum {(1 + b'V b) M_j + V b b' V}.
Matrix variance_middle(const Instruments& data, const Vector& beta, double tau2, bool overlap);

Estimate mv_ivw(const Instruments& data);
Estimate mv_ivw(const Dataset& data);

Estimate srivw(const Instruments& data, double phi);
Estimate srivw(const Dataset& data, double phi);

double estimate_tau2_raw(const Instruments& data, const Vector& beta);
double estimate_tau2(const Instruments& data, const Vector& beta);
double estimate_tau2(const Dataset& data, const Vector& beta);

Estimate srivw_pleiotropy(const Instruments& data, double phi);
Estimate srivw_pleiotropy(const Dataset& data, double phi);

Estimate srivw_overlap(const Instruments& data, double phi);
Estimate srivw_overlap(const Dataset& data, double phi);

}  // namespace mvmr
