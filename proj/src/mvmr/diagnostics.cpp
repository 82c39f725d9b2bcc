#include "mvmr/diagnostics.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include "mvmr/errors.hpp"
#include "mvmr/log.hpp"

namespace mvmr {

Vector snp_q_contributions(const Dataset& data, const Vector& beta) {
  return q_contributions(to_instruments(data), beta, QMode::plain);
}

double outlier_threshold(double alpha, std::size_t p) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha must lie in (0, 1]");
  }
  if (p == 0) {
    throw ValidationError("outlier threshold needs p > 0");
  }
  const boost::math::chi_squared_distribution<double> chi2(1.0);
  return boost::math::quantile(boost::math::complement(chi2, alpha / static_cast<double>(p)));
}

std::pair<Dataset, OutlierReport> remove_outliers(const Dataset& data, double alpha,
                                                  std::size_t max_iter, TuningMode mode) {
  if (max_iter == 0) {
    throw ValidationError("max_iter must be at least 1");
  }
  const QMode qmode = mode == TuningMode::overlap ? QMode::overlap : QMode::plain;
  OutlierReport report;
  Dataset current = data;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    const TuningResult tuned = select_phi(current, mode);
    const Vector q = q_contributions(to_instruments(current), tuned.selected_estimate.beta, qmode);
    const double threshold = outlier_threshold(alpha, current.p());
    if (iter == 0) {
      report.contributions = q;
      report.phi_star = tuned.phi_star;
      report.q_total = q.sum();
      report.threshold = threshold;
    }
    report.iterations = iter + 1;

    std::vector<std::size_t> drop;
    for (Index j = 0; j < q.size(); ++j) {
      if (q(j) > threshold) drop.push_back(static_cast<std::size_t>(j));
    }
    if (drop.empty()) break;
    if (current.p() - drop.size() <= static_cast<std::size_t>(current.k())) {
      logger()->warn("outlier exclusion would leave {} SNPs for K = {} exposures; keeping the "
                     "original dataset",
                     current.p() - drop.size(), current.k());
      report.excluded_ids.clear();
      report.refused = true;
      return {data, report};
    }
    for (const auto j : drop) {
      report.excluded_ids.push_back(current.snp(j).id);
    }
    current = current.without(drop);
  }
  return {current, report};
}

}  // namespace mvmr
