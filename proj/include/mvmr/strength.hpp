#pragma once

#include <cstddef>
#include <optional>

#include "mvmr/summary_data.hpp"
#include "mvmr/types.hpp"

namespace mvmr {

struct StrengthReport {
  Matrix strength_matrix;
  double lambda_min = 0.0;
  double lambda_min_over_sqrt_p = 0.0;
  Vector conditional_f;
  std::size_t p = 0;
};

// Diagnostic threshold on lambda_min / sqrt(p) below which IVs are
// considered too weak for reliable inference.
inline constexpr double kWeakInstrumentThreshold = 7.0;

// sum_j Omega_j^-1 g_j g_j' Omega_j^-T with Omega_j = diag(se_xj) Sigma^{1/2}.
Matrix strength_matrix(const Matrix& gammas, const Matrix& se_x, const Matrix& shared_correlation);

// Sample version (gamma_hat, minus p I) with lambda_min; conditional_f is
// filled with the plug-in statistics.
StrengthReport sample_strength(const Dataset& data);
StrengthReport sample_strength_matrix(const Dataset& data);

// Conditional F-statistic for exposure `k` (0-based). With `true_gammas` the
// oracle statistic is returned, otherwise gamma_hat is plugged in.
double conditional_f(const Dataset& data, Index k,
                     const std::optional<Matrix>& true_gammas = std::nullopt);
double conditional_f(const Matrix& gammas, const Matrix& se_x, const Matrix& shared_correlation,
                     Index k);

}  // namespace mvmr
