#pragma once

#include <utility>
#include <vector>

#include "mvmr/estimators.hpp"
#include "mvmr/summary_data.hpp"

namespace mvmr {

enum class QMode { plain, overlap };
enum class TuningMode { plain, pleiotropy, overlap };

struct TuningOptions {
  double c = 17.0;
  double step = 0.5;
  double tie_tolerance = 1e-12;
};

struct TuningResult {
  double phi_star = 0.0;
  std::vector<std::pair<double, double>> q_values;  // (phi, Q) over usable grid points
  std::vector<double> skipped;                      // grid points that failed to solve
  double grid_upper_exponent = 0.0;                 // c - lambda_min / sqrt(p)
  double lambda_min_over_sqrt_p = 0.0;
  Estimate selected_estimate;
};

std::vector<double> grid_b(double lambda_min_over_sqrt_p, double c = 17.0, double step = 0.5);

// Per-SNP standardized squared residuals; their sum is the Q statistic.
Vector q_contributions(const Instruments& data, const Vector& beta, QMode mode = QMode::plain);
double q_statistic(const Instruments& data, const Vector& beta, QMode mode = QMode::plain);
double q_statistic(const Dataset& data, const Vector& beta, QMode mode = QMode::plain);

TuningResult select_phi(const Instruments& data, double lambda_min_over_sqrt_p, TuningMode mode,
                        const TuningOptions& options = {});
// Computes lambda_min / sqrt(p) from the data and warns below the threshold.
TuningResult select_phi(const Dataset& data, TuningMode mode, const TuningOptions& options = {});

}  // namespace mvmr
