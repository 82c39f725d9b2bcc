#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mvmr/summary_data.hpp"
#include "mvmr/tuning.hpp"

namespace mvmr {

struct OutlierReport {
  Vector contributions;  // q_j from the first pass, dataset order
  std::vector<std::string> excluded_ids;
  double threshold = 0.0;
  std::size_t iterations = 0;
  double phi_star = 0.0;
  double q_total = 0.0;
  bool refused = false;
};

Vector snp_q_contributions(const Dataset& data, const Vector& beta);

// Bonferroni cutoff chi2_1(1 - alpha / p).
double outlier_threshold(double alpha, std::size_t p);

std::pair<Dataset, OutlierReport> remove_outliers(const Dataset& data, double alpha = 0.05,
                                                  std::size_t max_iter = 1,
                                                  TuningMode mode = TuningMode::plain);

}  // namespace mvmr
