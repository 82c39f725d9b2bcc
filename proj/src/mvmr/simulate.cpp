#include "mvmr/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <thread>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/erf.hpp>

#include "mvmr/errors.hpp"
#include "mvmr/log.hpp"
#include "mvmr/rng.hpp"
#include "mvmr/strength.hpp"
#include "mvmr/summary_template.hpp"
#include "mvmr/tuning.hpp"

namespace mvmr {

namespace {

// Stream tags for the counter-based generator: (tag, snp, rep).
constexpr std::uint32_t kTagSummary = 1;
constexpr std::uint32_t kTagGenotype = 2;
constexpr std::uint32_t kTagNoise = 3;
constexpr std::uint32_t kTagPhi = 4;

std::uint32_t rep_word(const SimConfig& config, std::size_t rep) {
  return static_cast<std::uint32_t>(config.reuse_first_rep ? 0 : rep);
}

std::string snp_id(std::size_t j, std::size_t p) {
  const int width = p >= 1000 ? 4 : 3;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snp%0*zu", width, j + 1);
  return buf;
}

Matrix cholesky_lower(const Matrix& a, const char* what) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) {
    throw ValidationError(std::string(what) + " is not positive definite");
  }
  return llt.matrixL();
}

}  // namespace

Vector beta_preset(CausalPreset preset) {
  switch (preset) {
    case CausalPreset::beta_a: return Vector{{0.8, 0.4, 0.0}};
    case CausalPreset::beta_b: return Vector{{0.1, -0.5, -0.9}};
    case CausalPreset::custom: break;
  }
  throw ValidationError("custom causal preset has no default beta0");
}

Matrix default_shared_correlation() {
  return Matrix{{1.0, -0.1, -0.05}, {-0.1, 1.0, 0.2}, {-0.05, 0.2, 1.0}};
}

Matrix default_overlap_correlation() {
  return Matrix{{1.0, -0.1, -0.05, -0.2},
                {-0.1, 1.0, 0.2, 0.5},
                {-0.05, 0.2, 1.0, 0.4},
                {-0.2, 0.5, 0.4, 1.0}};
}

Matrix effective_gammas(const SimConfig& config) {
  if (!(config.divisor > 0.0)) {
    throw ValidationError("divisor D must be positive");
  }
  Matrix g = config.truth.gammas;
  if (config.mode == SimMode::individual) return g;
  if (config.strength_preset == StrengthPreset::first_weak) {
    g.col(0) /= config.divisor;
  } else {
    g /= config.divisor;
  }
  return g;
}

SimConfig summary_config(CausalPreset causal, StrengthPreset strength, double divisor) {
  const TemplateTable t = embedded_template();
  SimConfig c;
  c.mode = SimMode::summary;
  c.causal_preset = causal;
  c.strength_preset = strength;
  c.divisor = divisor;
  c.truth.gammas = t.gammas;
  c.truth.se_x = t.se_x;
  c.truth.se_y = t.se_y;
  c.truth.beta0 = beta_preset(causal);
  c.truth.shared_correlation = default_shared_correlation();
  return c;
}

SimConfig individual_config(const IndividualParams& params, const Vector& beta0,
                            std::uint64_t seed) {
  if (params.s > params.p || params.s == 0) {
    throw ValidationError("individual mode needs 0 < s <= p");
  }
  if (!(params.h2 > 0.0 && params.h2 < 1.0)) {
    throw ValidationError("individual mode needs 0 < h2 < 1");
  }
  if (params.n < 3) {
    throw ValidationError("individual mode needs n >= 3");
  }
  const auto k = beta0.size();
  const auto p = static_cast<Index>(params.p);
  SimConfig c;
  c.mode = SimMode::individual;
  c.causal_preset = CausalPreset::custom;
  c.seed = seed;
  c.individual = params;
  c.truth.beta0 = beta0;

  // phi_jk ~ N(0, 1), drawn once per seed and independently per exposure.
  NormalStream phi(seed, kTagPhi, 0, 0);
  const double scale = std::sqrt(2.0 * params.h2 / static_cast<double>(params.s));
  c.truth.gammas = Matrix::Zero(p, k);
  for (Index j = 0; j < static_cast<Index>(params.s); ++j) {
    for (Index i = 0; i < k; ++i) {
      c.truth.gammas(j, i) = phi() * scale;
    }
  }

  // Population moments with Var(Z) = 1/2; they give nominal SEs and the
  // correlation of exposure estimates measured on the same individuals.
  const double u_var = 0.6 * (1.0 - params.h2);
  const double e_var = 0.4 * (1.0 - params.h2);
  const Matrix gcov = 0.5 * c.truth.gammas.transpose() * c.truth.gammas;
  Matrix xcov = gcov;
  xcov.array() += params.eta_x * params.eta_x * u_var;
  xcov.diagonal().array() += e_var;
  const Vector xsd = xcov.diagonal().cwiseSqrt();
  c.truth.shared_correlation = xsd.cwiseInverse().asDiagonal() * xcov * xsd.cwiseInverse().asDiagonal();
  c.truth.shared_correlation.diagonal().setOnes();
  const double nv = static_cast<double>(params.n) * 0.5;
  c.truth.se_x = (xsd / std::sqrt(nv)).transpose().replicate(p, 1);
  const double y_var = beta0.dot(xcov * beta0) + 2.0 * params.eta_y * params.eta_x * u_var * beta0.sum() +
                       params.eta_y * params.eta_y * u_var + e_var;
  c.truth.se_y = Vector::Constant(p, std::sqrt(y_var / nv));
  c.estimators = {Method::mv_ivw, Method::srivw};
  return c;
}

Dataset generate_summary(const SimConfig& config, std::size_t rep_index) {
  if (config.mode != SimMode::summary) {
    throw ValidationError("generate_summary needs a summary-mode config");
  }
  const TrueModel& t = config.truth;
  const Index p = t.gammas.rows();
  const Index k = t.gammas.cols();
  if (t.se_x.rows() != p || t.se_x.cols() != k || t.se_y.size() != p || t.beta0.size() != k) {
    throw ValidationError("true model dimensions are inconsistent");
  }
  const Matrix g = effective_gammas(config);
  const bool overlap = t.overlap_correlation.has_value();
  Matrix corr = t.shared_correlation;
  Matrix chol;
  if (overlap) {
    if (t.overlap_correlation->rows() != k + 1) {
      throw ValidationError("overlap correlation must be (K+1) x (K+1)");
    }
    corr = t.overlap_correlation->topLeftCorner(k, k);
    chol = cholesky_lower(*t.overlap_correlation, "overlap correlation");
  } else {
    chol = Matrix::Zero(k + 1, k + 1);
    chol.topLeftCorner(k, k) = cholesky_lower(corr, "shared correlation");
    chol(k, k) = 1.0;
  }

  const std::uint32_t rep = rep_word(config, rep_index);
  std::vector<SnpSummary> snps;
  snps.reserve(static_cast<std::size_t>(p));
  Vector z(k + 1);
  Vector scale(k + 1);
  for (Index j = 0; j < p; ++j) {
    NormalStream rng(config.seed, kTagSummary, static_cast<std::uint32_t>(j), rep);
    for (Index i = 0; i <= k; ++i) z(i) = rng();
    const double alpha = t.tau0 > 0.0 ? t.tau0 * rng() : 0.0;
    scale.head(k) = t.se_x.row(j).transpose();
    scale(k) = t.se_y(j);
    // Xi_j = diag(s) C diag(s), so diag(s) L z has covariance Xi_j.
    const Vector e = scale.cwiseProduct(chol * z);

    SnpSummary s;
    s.id = snp_id(static_cast<std::size_t>(j), static_cast<std::size_t>(p));
    s.gamma_hat = g.row(j).transpose() + e.head(k);
    s.se_x = t.se_x.row(j).transpose();
    const double mean_y = g.row(j).dot(t.beta0) + alpha;
    s.gamma_y_hat = config.outcome_noise ? mean_y + e(k) : mean_y;
    s.se_y = t.se_y(j);
    if (overlap) {
      s.cov_xy = t.overlap_correlation->block(0, k, k, 1).cwiseProduct(s.se_x) * s.se_y;
    }
    snps.push_back(std::move(s));
  }
  return Dataset(std::move(snps), corr);
}

namespace {

// Marginal simple regressions of each target column on each SNP.
RegressionSummaries regress(const Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>& z,
                            const Matrix& targets) {
  const Index n = z.rows();
  const Index p = z.cols();
  const Index m = targets.cols();
  const Matrix tc = targets.rowwise() - targets.colwise().mean();
  const Eigen::RowVectorXd tss = tc.colwise().squaredNorm();
  RegressionSummaries out;
  out.beta.resize(p, m);
  out.se.resize(p, m);
  constexpr Index kBlock = 128;
  Matrix zb;
  const double dn = static_cast<double>(n);
  for (Index start = 0; start < p; start += kBlock) {
    const Index b = std::min(kBlock, p - start);
    zb = z.middleCols(start, b).cast<double>();
    const Eigen::RowVectorXd sz = zb.colwise().sum();
    const Eigen::RowVectorXd szz = zb.colwise().squaredNorm();
    const Matrix szt = zb.transpose() * tc;  // b x m; sum (Z - Zbar) T_c = sum Z T_c
    for (Index c = 0; c < b; ++c) {
      const double sxx = szz(c) - sz(c) * sz(c) / dn;
      for (Index i = 0; i < m; ++i) {
        if (sxx <= 0.0) {
          out.beta(start + c, i) = 0.0;
          out.se(start + c, i) = std::numeric_limits<double>::infinity();
          continue;
        }
        const double bhat = szt(c, i) / sxx;
        const double rss = std::max(tss(i) - bhat * bhat * sxx, 0.0);
        out.beta(start + c, i) = bhat;
        out.se(start + c, i) = std::sqrt(rss / (dn - 2.0) / sxx);
      }
    }
  }
  return out;
}

struct Sample {
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> z;  // n x p
  Matrix x;                                                       // n x K
  Vector y;
};

Sample draw_sample(const SimConfig& config, std::uint32_t rep, std::uint32_t dataset) {
  const IndividualParams& ip = config.individual;
  const auto n = static_cast<Index>(ip.n);
  const auto p = static_cast<Index>(ip.p);
  const Matrix& gam = config.truth.gammas;
  const Index k = gam.cols();
  Sample s;
  s.z.resize(n, p);
  for (Index j = 0; j < p; ++j) {
    Philox4x32 eng(config.seed, (kTagGenotype << 2) | dataset, static_cast<std::uint32_t>(j), rep);
    std::uint8_t* col = s.z.col(j).data();
    Index i = 0;
    while (i < n) {
      // Sum of two fair bits: P(0) = P(2) = 1/4, P(1) = 1/2.
      std::uint32_t bits = eng();
      for (int t = 0; t < 16 && i < n; ++t, ++i, bits >>= 2) {
        col[i] = static_cast<std::uint8_t>((bits & 1u) + ((bits >> 1) & 1u));
      }
    }
  }

  NormalStream noise(config.seed, (kTagNoise << 2) | dataset, 0, rep);
  const double u_sd = std::sqrt(0.6 * (1.0 - ip.h2));
  const double e_sd = std::sqrt(0.4 * (1.0 - ip.h2));
  Vector u(n);
  for (Index i = 0; i < n; ++i) u(i) = u_sd * noise();
  s.x.resize(n, k);
  for (Index c = 0; c < k; ++c) {
    for (Index i = 0; i < n; ++i) s.x(i, c) = ip.eta_x * u(i) + e_sd * noise();
  }
  const auto causal = static_cast<Index>(ip.s);
  constexpr Index kBlock = 128;
  for (Index start = 0; start < causal; start += kBlock) {
    const Index b = std::min(kBlock, causal - start);
    s.x.noalias() += s.z.middleCols(start, b).cast<double>() * gam.middleRows(start, b);
  }
  s.y.resize(n);
  for (Index i = 0; i < n; ++i) {
    s.y(i) = ip.intercept_y + s.x.row(i).dot(config.truth.beta0) + ip.eta_y * u(i) + e_sd * noise();
  }
  return s;
}

}  // namespace

IndividualDraw generate_individual(const SimConfig& config, std::size_t rep_index) {
  if (config.mode != SimMode::individual) {
    throw ValidationError("generate_individual needs an individual-mode config");
  }
  const std::uint32_t rep = rep_word(config, rep_index);
  IndividualDraw out;
  {
    const Sample s = draw_sample(config, rep, 0);
    out.exposure = regress(s.z, s.x);
  }
  {
    const Sample s = draw_sample(config, rep, 1);
    out.outcome = regress(s.z, s.y);
  }
  {
    const Sample s = draw_sample(config, rep, 2);
    out.selection = regress(s.z, s.x);
  }
  return out;
}

Matrix association_pvalues(const RegressionSummaries& summaries) {
  Matrix pv(summaries.beta.rows(), summaries.beta.cols());
  for (Index j = 0; j < pv.rows(); ++j) {
    for (Index i = 0; i < pv.cols(); ++i) {
      const double z = summaries.beta(j, i) / summaries.se(j, i);
      pv(j, i) = std::isfinite(z) ? boost::math::erfc(std::abs(z) / std::sqrt(2.0)) : 1.0;
    }
  }
  return pv;
}

std::vector<std::size_t> select_ivs(const RegressionSummaries& selection, Index k,
                                    double threshold) {
  if (selection.beta.cols() != k) {
    throw ValidationError("selection summaries must have K columns");
  }
  const Matrix pv = association_pvalues(selection);
  std::vector<std::size_t> out;
  for (Index j = 0; j < pv.rows(); ++j) {
    if ((pv.row(j).array() <= threshold).any()) out.push_back(static_cast<std::size_t>(j));
  }
  if (out.empty()) {
    throw InsufficientDataError("no SNP passed the selection threshold " +
                                std::to_string(threshold));
  }
  return out;
}

IndividualDataset assemble_individual(const SimConfig& config, const IndividualDraw& draw) {
  const Index k = config.truth.gammas.cols();
  const IndividualParams& ip = config.individual;
  const double threshold =
      ip.selection_threshold > 0.0 ? ip.selection_threshold : 0.01 / static_cast<double>(k);
  std::vector<std::size_t> selected = select_ivs(draw.selection, k, threshold);

  const Matrix pv = association_pvalues(draw.selection);
  std::vector<Index> nulls;
  for (Index j = 0; j < pv.rows(); ++j) {
    if ((pv.row(j).array() >= ip.null_threshold).all()) nulls.push_back(j);
  }
  const Matrix zexp = draw.exposure.beta(nulls, Eigen::all).cwiseQuotient(draw.exposure.se(nulls, Eigen::all));
  const Matrix sigma = estimate_shared_correlation(zexp);

  std::vector<SnpSummary> snps;
  snps.reserve(selected.size());
  for (const auto j : selected) {
    const auto r = static_cast<Index>(j);
    SnpSummary s;
    s.id = snp_id(j, ip.p);
    s.gamma_hat = draw.exposure.beta.row(r).transpose();
    s.se_x = draw.exposure.se.row(r).transpose();
    s.gamma_y_hat = draw.outcome.beta(r, 0);
    s.se_y = draw.outcome.se(r, 0);
    snps.push_back(std::move(s));
  }
  return IndividualDataset{Dataset(std::move(snps), sigma), std::move(selected), nulls.size()};
}

const MetricRow& MetricsTable::row(Method method, Index exposure) const {
  for (const auto& r : rows) {
    if (r.method == method && r.exposure == exposure) return r;
  }
  throw ValidationError("no metrics row for " + std::string(to_string(method)) + " exposure " +
                        std::to_string(exposure + 1));
}

namespace {

struct RepOutcome {
  bool ok = false;
  std::string error;
  std::vector<Vector> beta;
  std::vector<Vector> se;
  double lambda = 0.0;
  double true_lambda = std::numeric_limits<double>::quiet_NaN();
  Vector cond_f;
  double selected = 0.0;
  double phi_star = 0.0;
  std::optional<double> tau2;
};

Estimate run_method(Method m, const Instruments& data, double lambda, bool tune) {
  if (m == Method::mv_ivw) return mv_ivw(data);
  const TuningMode mode = m == Method::srivw            ? TuningMode::plain
                          : m == Method::srivw_pleiotropy ? TuningMode::pleiotropy
                                                          : TuningMode::overlap;
  if (tune) return select_phi(data, lambda, mode).selected_estimate;
  switch (m) {
    case Method::srivw: return srivw(data, 0.0);
    case Method::srivw_pleiotropy: return srivw_pleiotropy(data, 0.0);
    default: return srivw_overlap(data, 0.0);
  }
}

RepOutcome run_rep(const SimConfig& config, const std::vector<Method>& estimators,
                   std::size_t rep, double true_lambda) {
  RepOutcome out;
  try {
    std::optional<Dataset> data;
    if (config.mode == SimMode::summary) {
      data = generate_summary(config, rep);
      out.true_lambda = true_lambda;
    } else {
      IndividualDataset d = assemble_individual(config, generate_individual(config, rep));
      std::vector<Index> rows(d.selected.begin(), d.selected.end());
      Matrix se(static_cast<Index>(rows.size()), d.data.k());
      for (std::size_t j = 0; j < d.data.p(); ++j) {
        se.row(static_cast<Index>(j)) = d.data.snp(j).se_x.transpose();
      }
      const Matrix truth = config.truth.gammas(rows, Eigen::all);
      const Matrix sm = strength_matrix(truth, se, d.data.shared_correlation());
      out.true_lambda = Eigen::SelfAdjointEigenSolver<Matrix>(sm, Eigen::EigenvaluesOnly).eigenvalues()(0) /
                        std::sqrt(static_cast<double>(rows.size()));
      out.selected = static_cast<double>(d.selected.size());
      data.emplace(std::move(d.data));
    }
    const StrengthReport sr = sample_strength(*data);
    out.lambda = sr.lambda_min_over_sqrt_p;
    out.cond_f = sr.conditional_f;
    if (config.mode == SimMode::summary) out.selected = static_cast<double>(data->p());
    const Instruments inst = to_instruments(*data);
    bool phi_recorded = false;
    for (const Method m : estimators) {
      const Estimate e = run_method(m, inst, out.lambda, config.tune);
      if (!e.beta.allFinite() || !e.se.allFinite()) {
        throw Error(std::string(to_string(m)) + " produced a non-finite estimate");
      }
      if (m != Method::mv_ivw && !phi_recorded) {
        out.phi_star = e.phi;
        phi_recorded = true;
      }
      if (e.tau2) out.tau2 = e.tau2;
      out.beta.push_back(e.beta);
      out.se.push_back(e.se);
    }
    out.ok = true;
  } catch (const std::exception& ex) {
    out.ok = false;
    out.error = ex.what();
  }
  return out;
}

}  // namespace

MetricsTable monte_carlo(const SimConfig& config, const std::vector<Method>& estimators,
                         const MonteCarloOptions& options) {
  if (config.reps < 2) {
    throw ValidationError("monte_carlo needs reps >= 2");
  }
  if (estimators.empty()) {
    throw ValidationError("no estimators requested");
  }
  const Index k = config.truth.beta0.size();
  for (const Method m : estimators) {
    if (m == Method::srivw_overlap && !config.truth.overlap_correlation) {
      throw ValidationError("srivw_overlap needs an overlap design");
    }
  }

  double true_lambda = std::numeric_limits<double>::quiet_NaN();
  if (config.mode == SimMode::summary) {
    const Matrix corr = config.truth.overlap_correlation
                            ? Matrix(config.truth.overlap_correlation->topLeftCorner(k, k))
                            : config.truth.shared_correlation;
    const Matrix sm = strength_matrix(effective_gammas(config), config.truth.se_x, corr);
    true_lambda = Eigen::SelfAdjointEigenSolver<Matrix>(sm, Eigen::EigenvaluesOnly).eigenvalues()(0) /
                  std::sqrt(static_cast<double>(config.truth.gammas.rows()));
  }

  std::vector<RepOutcome> results(config.reps);
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(config.reps)));
  {
    const ScopedLogLevel quiet(spdlog::level::err);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t r = next++; r < config.reps; r = next++) {
        results[r] = run_rep(config, estimators, r, true_lambda);
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }

  MetricsTable table;
  table.reps = config.reps;
  std::vector<std::size_t> used;
  for (std::size_t r = 0; r < results.size(); ++r) {
    if (results[r].ok) {
      used.push_back(r);
    } else {
      ++table.failures;
    }
  }
  if (table.failures > 0) {
    const auto& first = std::find_if(results.begin(), results.end(),
                                     [](const RepOutcome& o) { return !o.ok; })->error;
    if (table.failures * 100 >= config.reps) {
      throw Error(std::to_string(table.failures) + " of " + std::to_string(config.reps) +
                  " replications failed (first error: " + first + "); aborting");
    }
    logger()->warn("{} of {} replications failed and were excluded (first error: {})",
                   table.failures, config.reps, first);
  }
  table.reps_used = used.size();
  const double nu = static_cast<double>(used.size());

  table.mean_conditional_f = Vector::Zero(k);
  double tau_sum = 0.0;
  bool any_tau = false;
  for (const auto r : used) {
    const RepOutcome& o = results[r];
    table.mean_lambda_min_over_sqrt_p += o.lambda / nu;
    table.mean_true_lambda_min_over_sqrt_p += o.true_lambda / nu;
    table.mean_conditional_f += o.cond_f / nu;
    table.mean_selected += o.selected / nu;
    table.mean_phi_star += o.phi_star / nu;
    if (o.tau2) {
      tau_sum += *o.tau2;
      any_tau = true;
    }
  }
  if (any_tau) table.mean_tau2 = tau_sum / nu;

  for (std::size_t mi = 0; mi < estimators.size(); ++mi) {
    Matrix est(static_cast<Index>(used.size()), k);
    Matrix ses(static_cast<Index>(used.size()), k);
    for (std::size_t i = 0; i < used.size(); ++i) {
      est.row(static_cast<Index>(i)) = results[used[i]].beta[mi].transpose();
      ses.row(static_cast<Index>(i)) = results[used[i]].se[mi].transpose();
    }
    for (Index c = 0; c < k; ++c) {
      MetricRow row;
      row.method = estimators[mi];
      row.exposure = c;
      row.beta0 = config.truth.beta0(c);
      row.mean_est = est.col(c).mean();
      row.sd = std::sqrt((est.col(c).array() - row.mean_est).square().sum() / std::max(nu - 1.0, 1.0));
      row.mean_se = ses.col(c).mean();
      std::size_t covered = 0;
      for (Index i = 0; i < est.rows(); ++i) {
        if (std::abs(est(i, c) - row.beta0) <= kZ975 * ses(i, c)) ++covered;
      }
      row.coverage = static_cast<double>(covered) / nu;
      table.rows.push_back(row);
    }
    table.estimates[estimators[mi]] = std::move(est);
  }
  return table;
}

MetricsTable monte_carlo(const SimConfig& config, const MonteCarloOptions& options) {
  return monte_carlo(config, config.estimators, options);
}

std::string format_metrics(const MetricsTable& table) {
  std::string out;
  auto line = [&](const std::string& key, const std::string& value) {
    out += "# " + key + "\t" + value + "\n";
  };
  line("reps", std::to_string(table.reps));
  line("reps_used", std::to_string(table.reps_used));
  line("failures", std::to_string(table.failures));
  line("mean_lambda_min_over_sqrt_p", format_double(table.mean_lambda_min_over_sqrt_p));
  line("mean_true_lambda_min_over_sqrt_p", format_double(table.mean_true_lambda_min_over_sqrt_p));
  std::string f;
  for (Index i = 0; i < table.mean_conditional_f.size(); ++i) {
    f += (i ? "," : "") + format_double(table.mean_conditional_f(i));
  }
  line("mean_conditional_f", f);
  line("mean_selected", format_double(table.mean_selected));
  line("mean_phi_star", format_double(table.mean_phi_star));
  if (table.mean_tau2) line("mean_tau2", format_double(*table.mean_tau2));
  out += "estimator\texposure\tbeta0\tmean_est\tsd\tmean_se\tcoverage\n";
  for (const auto& r : table.rows) {
    out += std::string(to_string(r.method)) + "\t" + std::to_string(r.exposure + 1) + "\t" +
           format_double(r.beta0) + "\t" + format_double(r.mean_est) + "\t" + format_double(r.sd) +
           "\t" + format_double(r.mean_se) + "\t" + format_double(r.coverage) + "\n";
  }
  return out;
}

}  // namespace mvmr
