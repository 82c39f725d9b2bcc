#include "mvmr/tuning.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mvmr/errors.hpp"
#include "mvmr/log.hpp"
#include "mvmr/strength.hpp"

namespace mvmr {

std::vector<double> grid_b(double lambda_min_over_sqrt_p, double c, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw ValidationError("grid step must be positive");
  }
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw ValidationError("grid upper exponent c must be nonnegative");
  }
  const auto n = static_cast<long>(std::floor(c / step + 1e-9));
  std::vector<double> grid{0.0};
  grid.reserve(static_cast<std::size_t>(n) + 2);
  for (long m = 0; m <= n; ++m) {
    const double v = std::exp(static_cast<double>(m) * step - lambda_min_over_sqrt_p);
    // Extremely strong or weak IVs can underflow to 0 or overflow; such
    // points would duplicate phi = 0 or be meaningless.
    if (v > grid.back() && std::isfinite(v)) {
      grid.push_back(v);
    }
  }
  return grid;
}

Vector q_contributions(const Instruments& data, const Vector& beta, QMode mode) {
  if (beta.size() != data.k()) {
    throw ValidationError("beta has the wrong length");
  }
  if (mode == QMode::overlap && !data.cov_xy) {
    throw ValidationError("overlap Q statistic requires cov_xy for every SNP");
  }
  Vector q(data.p());
  for (Index j = 0; j < data.p(); ++j) {
    const double r = data.gamma_y_hat(j) - data.gamma_hat.row(j).dot(beta);
    double den = data.se_y(j) * data.se_y(j) +
                 beta.dot(data.sigma_x[static_cast<std::size_t>(j)] * beta);
    if (mode == QMode::overlap) {
      den -= 2.0 * beta.dot(data.cov_xy->row(j).transpose());
    }
    if (!(den > 0.0)) {
      throw DegenerateDenominatorError("Q denominator is not positive for SNP row " +
                                       std::to_string(j + 1));
    }
    q(j) = r * r / den;
  }
  return q;
}

double q_statistic(const Instruments& data, const Vector& beta, QMode mode) {
  return q_contributions(data, beta, mode).sum();
}

double q_statistic(const Dataset& data, const Vector& beta, QMode mode) {
  return q_statistic(to_instruments(data), beta, mode);
}

TuningResult select_phi(const Instruments& data, double lambda_min_over_sqrt_p, TuningMode mode,
                        const TuningOptions& options) {
  const bool overlap = mode == TuningMode::overlap;
  const SrivwSystem system(data, overlap);
  const QMode qmode = overlap ? QMode::overlap : QMode::plain;

  TuningResult out;
  out.lambda_min_over_sqrt_p = lambda_min_over_sqrt_p;
  out.grid_upper_exponent = options.c - lambda_min_over_sqrt_p;
  double best_q = std::numeric_limits<double>::infinity();
  for (const double phi : grid_b(lambda_min_over_sqrt_p, options.c, options.step)) {
    double q = 0.0;
    try {
      q = q_statistic(data, system.beta(phi), qmode);
    } catch (const IllConditionedError&) {
      out.skipped.push_back(phi);
      continue;
    } catch (const DegenerateSpectrumError&) {
      out.skipped.push_back(phi);
      continue;
    } catch (const DegenerateDenominatorError&) {
      out.skipped.push_back(phi);
      continue;
    }
    out.q_values.emplace_back(phi, q);
    // Ascending grid: a later point must beat the incumbent by more than the
    // tolerance, so ties go to the smaller phi.
    if (q < best_q - options.tie_tolerance * std::max(1.0, std::abs(best_q)) ||
        out.q_values.size() == 1) {
      best_q = q;
      out.phi_star = phi;
    }
  }
  if (out.q_values.empty()) {
    throw TuningFailedError("every phi in the tuning grid gave a numerically singular system");
  }
  const Method method = mode == TuningMode::plain        ? Method::srivw
                        : mode == TuningMode::pleiotropy ? Method::srivw_pleiotropy
                                                         : Method::srivw_overlap;
  out.selected_estimate = system.estimate(out.phi_star, method);
  return out;
}

TuningResult select_phi(const Dataset& data, TuningMode mode, const TuningOptions& options) {
  const double l = sample_strength_matrix(data).lambda_min_over_sqrt_p;
  if (l < kWeakInstrumentThreshold) {
    logger()->warn("lambda_min/sqrt(p) = {:.3f} is below {}; instruments are weak and the "
                   "tuned estimate may be unreliable",
                   l, kWeakInstrumentThreshold);
  }
  return select_phi(to_instruments(data), l, mode, options);
}

}  // namespace mvmr
