// Acceptance checks, one PASS/FAIL line per criterion. Run a single one with
// --criterion N; with no argument all ten are run in order.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <spdlog/fmt/fmt.h>

#include "mvmr/diagnostics.hpp"
#include "mvmr/errors.hpp"
#include "mvmr/estimators.hpp"
#include "mvmr/log.hpp"
#include "mvmr/rng.hpp"
#include "mvmr/simulate.hpp"
#include "mvmr/strength.hpp"
#include "mvmr/tuning.hpp"

using namespace mvmr;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

constexpr std::uint64_t kSeed = 20240611;

std::string vec(const Vector& v, int digits = 4) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += fmt::format("{}{:.{}f}", i ? ", " : "", v(i), digits);
  return s + ")";
}

Matrix random_symmetric(Index k, NormalStream& rng) {
  Matrix x(k, k);
  for (Index i = 0; i < x.size(); ++i) x.data()[i] = rng();
  return 0.5 * (x + x.transpose());
}

Matrix random_correlation(Index k, NormalStream& rng) {
  Matrix a(k, k + 2);
  for (Index i = 0; i < a.size(); ++i) a.data()[i] = rng();
  Matrix c = a * a.transpose() + Matrix::Identity(k, k) * static_cast<double>(k);
  const Vector d = c.diagonal().cwiseSqrt().cwiseInverse();
  c = d.asDiagonal() * c * d.asDiagonal();
  c.diagonal().setOnes();
  return 0.5 * (c + c.transpose());
}

// 1. |eig(R_phi(A))| >= 2 sqrt(phi), eigenvectors of A preserved.
Outcome spectral_operator() {
  NormalStream rng(kSeed, 101, 0, 0);
  double worst_ratio = INFINITY;
  double worst_angle = 0.0;
  std::size_t separated = 0;
  for (int t = 0; t < 1000; ++t) {
    const Matrix a = random_symmetric(5, rng);
    const Eigen::SelfAdjointEigenSolver<Matrix> ea(a);
    for (const double phi : {1e-3, 1.0, 1e3}) {
      const Matrix r = spectral_regularize(a, phi);
      const Eigen::SelfAdjointEigenSolver<Matrix> er(r);
      worst_ratio = std::min(worst_ratio, er.eigenvalues().cwiseAbs().minCoeff() / (2.0 * std::sqrt(phi)));

      // Map each eigenvalue of A through l + phi / l; where the images are
      // well separated the eigenvectors of R must match those of A.
      const Vector mapped = ea.eigenvalues().unaryExpr([phi](double l) { return l + phi / l; });
      const double scale = mapped.cwiseAbs().maxCoeff();
      for (Index i = 0; i < 5; ++i) {
        double gap = INFINITY;
        for (Index k = 0; k < 5; ++k) {
          if (k != i) gap = std::min(gap, std::abs(mapped(i) - mapped(k)));
        }
        if (gap < 1e-3 * scale) continue;
        ++separated;
        Index match = 0;
        (er.eigenvalues().array() - mapped(i)).abs().minCoeff(&match);
        const Vector u = ea.eigenvectors().col(i);
        Vector v = er.eigenvectors().col(match);
        if (u.dot(v) < 0) v = -v;
        // Chordal distance equals 2 sin(angle / 2), accurate for tiny angles.
        const double angle = 2.0 * std::asin(std::min(1.0, (u - v).norm() / 2.0));
        worst_angle = std::max(worst_angle, angle);
      }
    }
  }
  const bool pass = worst_ratio >= 1.0 - 1e-12 && worst_angle < 1e-8;
  return {pass, fmt::format("min |eig| / (2 sqrt(phi)) = {:.6f}, max subspace angle = {:.2e} over {} "
                            "separated eigenpairs",
                            worst_ratio, worst_angle, separated)};
}

// Instrument data for oracle comparisons.
Instruments random_instruments(NormalStream& rng, Index p, Index k) {
  const Matrix corr = random_correlation(k, rng);
  Vector beta(k);
  for (Index i = 0; i < k; ++i) beta(i) = 0.5 * rng();
  Instruments d;
  d.gamma_hat.resize(p, k);
  d.gamma_y_hat.resize(p);
  d.se_y.resize(p);
  for (Index j = 0; j < p; ++j) {
    Vector se(k), g(k);
    for (Index i = 0; i < k; ++i) {
      g(i) = 0.2 * rng();
      se(i) = 0.02 * (0.5 + std::abs(rng()));
      d.gamma_hat(j, i) = g(i) + se(i) * rng();
    }
    d.se_y(j) = 0.03 * (0.5 + std::abs(rng()));
    d.gamma_y_hat(j) = g.dot(beta) + d.se_y(j) * rng();
    d.sigma_x.push_back(se.asDiagonal() * corr * se.asDiagonal());
  }
  return d;
}

double rel_err(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
}

// 2. srivw(0) and mv_ivw equal their closed forms computed by LU solves.
Outcome closed_form_oracle() {
  NormalStream rng(kSeed, 102, 0, 0);
  double worst_sr = 0.0;
  double worst_ivw = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Instruments d = random_instruments(rng, 50, 3);
    Matrix m = Matrix::Zero(3, 3);
    Matrix v = Matrix::Zero(3, 3);
    Vector num = Vector::Zero(3);
    for (Index j = 0; j < 50; ++j) {
      const double s2 = d.se_y(j) * d.se_y(j);
      const Vector g = d.gamma_hat.row(j).transpose();
      m += g * g.transpose() / s2;
      v += d.sigma_x[static_cast<std::size_t>(j)] / s2;
      num += g * d.gamma_y_hat(j) / s2;
    }
    const Vector b_sr = (m - v).partialPivLu().solve(num);
    const Vector b_ivw = m.partialPivLu().solve(num);
    worst_sr = std::max(worst_sr, rel_err(srivw(d, 0.0).beta, b_sr));
    worst_ivw = std::max(worst_ivw, rel_err(mv_ivw(d).beta, b_ivw));
  }
  return {worst_sr < 1e-10 && worst_ivw < 1e-10,
          fmt::format("max relative error srivw(0) = {:.2e}, mv_ivw = {:.2e}", worst_sr, worst_ivw)};
}

// 3. E[sample strength matrix] equals the population matrix.
Outcome strength_unbiased() {
  const Index p = 100;
  const Index k = 3;
  NormalStream setup(kSeed, 103, 0, 0);
  const Matrix corr = random_correlation(k, setup);
  Matrix g(p, k), se(p, k);
  for (Index j = 0; j < p; ++j) {
    for (Index i = 0; i < k; ++i) {
      se(j, i) = 0.01 * (0.5 + std::abs(setup()));
      g(j, i) = 0.03 * setup();
    }
  }
  const Matrix truth = strength_matrix(g, se, corr);
  const Eigen::LLT<Matrix> chol(corr);
  const Matrix l = chol.matrixL();

  const int draws = 10000;
  Matrix sum = Matrix::Zero(k, k);
  Matrix sum2 = Matrix::Zero(k, k);
  for (int r = 0; r < draws; ++r) {
    std::vector<SnpSummary> snps;
    snps.reserve(p);
    for (Index j = 0; j < p; ++j) {
      NormalStream z(kSeed, 103, static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(r + 1));
      Vector e(k);
      for (Index i = 0; i < k; ++i) e(i) = z();
      SnpSummary s;
      s.id = "s" + std::to_string(j);
      s.se_x = se.row(j).transpose();
      s.gamma_hat = g.row(j).transpose() + s.se_x.cwiseProduct(l * e);
      s.gamma_y_hat = 0.0;
      s.se_y = 1.0;
      snps.push_back(std::move(s));
    }
    const Matrix m = sample_strength_matrix(Dataset(std::move(snps), corr)).strength_matrix;
    sum += m;
    sum2 += m.cwiseProduct(m);
  }
  const Matrix mean = sum / draws;
  const Matrix sd = (sum2 / draws - mean.cwiseProduct(mean)).cwiseMax(0.0).cwiseSqrt();
  const Matrix z = (mean - truth).cwiseQuotient(sd / std::sqrt(static_cast<double>(draws)));
  const double worst = z.cwiseAbs().maxCoeff();
  return {worst <= 3.0, fmt::format("max |mean - truth| / MC SE = {:.2f} (diag of truth {})", worst,
                                    vec(truth.diagonal(), 1))};
}

// 4. Main-simulation reproduction on the embedded template.
Outcome table1() {
  bool pass = true;
  std::string detail;
  for (const double d : {2.5, 5.5, 9.25}) {
    SimConfig c = summary_config(CausalPreset::beta_a, StrengthPreset::first_weak, d);
    c.reps = 2000;
    c.seed = kSeed + 4;
    const MetricsTable t = monte_carlo(c, std::vector<Method>{Method::mv_ivw, Method::srivw});
    Vector cov_sr(3), mean_sr(3);
    for (Index k = 0; k < 3; ++k) {
      cov_sr(k) = t.row(Method::srivw, k).coverage;
      mean_sr(k) = t.row(Method::srivw, k).mean_est;
      if (cov_sr(k) < 0.93 || cov_sr(k) > 0.97) pass = false;
    }
    const MetricRow& ivw = t.row(Method::mv_ivw, 0);
    const double bias_z = std::abs(ivw.mean_est - ivw.beta0) / (ivw.sd / std::sqrt(static_cast<double>(t.reps_used)));
    if (bias_z <= 5.0) pass = false;
    if (d == 9.25 && ivw.coverage >= 0.40) pass = false;
    detail += fmt::format("\n    D={}: lambda/sqrt(p)={:.2f}  SRIVW mean {} CP {}  MV-IVW beta1 mean {:.4f} "
                          "CP {:.3f} bias/MCSE {:.1f}",
                          d, t.mean_lambda_min_over_sqrt_p, vec(mean_sr), vec(cov_sr, 3), ivw.mean_est,
                          ivw.coverage, bias_z);
  }
  return {pass, detail};
}

// 5. MV-IVW converges to (sum M_j + V_j)^-1 (sum M_j) beta0.
Outcome proposition_limit() {
  // Two SNP profiles with sigma^2 = 1/5000: M_1 = [[25, 25], [25, 25]],
  // M_2 = [[25, 50], [50, 100]], V = P; each profile is repeated 25 times.
  const double n = 5000.0;
  const double g = std::sqrt(25.0 / n);
  const Matrix p_corr{{1.0, 0.8}, {0.8, 1.0}};
  const Index p = 50;
  Matrix gammas(p, 2);
  for (Index j = 0; j < p; ++j) gammas.row(j) = j < p / 2 ? Vector{{g, g}}.transpose() : Vector{{g, 2 * g}}.transpose();

  bool pass = true;
  std::string detail;
  for (const Vector& beta0 : {Vector{{1.0, 1.0}}, Vector{{1.0, 0.0}}}) {
    Matrix sm = Matrix::Zero(2, 2);
    for (Index j = 0; j < p; ++j) sm += gammas.row(j).transpose() * gammas.row(j) * n;
    const Matrix sv = p_corr * static_cast<double>(p);
    const Vector limit = (sm + sv).inverse() * sm * beta0;
    const Vector quoted = beta0(1) == 1.0 ? Vector{{0.754, 1.120}} : Vector{{0.822, 0.095}};
    if ((limit - quoted).cwiseAbs().maxCoeff() > 5e-4) pass = false;

    SimConfig c;
    c.causal_preset = CausalPreset::custom;
    c.truth.gammas = gammas;
    c.truth.se_x = Matrix::Constant(p, 2, 1.0 / std::sqrt(n));
    c.truth.se_y = Vector::Constant(p, 1.0 / std::sqrt(n));
    c.truth.beta0 = beta0;
    c.truth.shared_correlation = p_corr;
    c.divisor = 1.0;
    c.reps = 10000;
    c.seed = kSeed + 5;
    c.tune = false;
    // Noise only in gamma_hat; Gamma_hat sits at gamma' beta0.
    c.outcome_noise = false;
    const MetricsTable t = monte_carlo(c, std::vector<Method>{Method::mv_ivw});
    Vector mean(2), z(2);
    for (Index k = 0; k < 2; ++k) {
      const MetricRow& r = t.row(Method::mv_ivw, k);
      mean(k) = r.mean_est;
      z(k) = (r.mean_est - limit(k)) / (r.sd / std::sqrt(static_cast<double>(t.reps_used)));
      if (std::abs(z(k)) > 3.0) pass = false;
    }
    detail += fmt::format("\n    beta0={}: limit {} MC mean {} z {}", vec(beta0, 0), vec(limit, 3),
                          vec(mean), vec(z, 2));
  }
  return {pass, detail};
}

// 6. Balanced pleiotropy design.
Outcome pleiotropy() {
  SimConfig c = summary_config(CausalPreset::beta_a, StrengthPreset::first_weak, 8.0);
  c.truth.tau0 = 2.0 * c.truth.se_y.mean();
  c.reps = 2000;
  c.seed = kSeed + 6;
  const MetricsTable t = monte_carlo(c, std::vector<Method>{Method::mv_ivw, Method::srivw_pleiotropy});
  bool pass = true;
  Vector cov(3), mean(3);
  for (Index k = 0; k < 3; ++k) {
    cov(k) = t.row(Method::srivw_pleiotropy, k).coverage;
    mean(k) = t.row(Method::srivw_pleiotropy, k).mean_est;
    if (cov(k) < 0.93 || cov(k) > 0.97) pass = false;
  }
  const double tau2 = t.mean_tau2.value_or(NAN);
  const double target = c.truth.tau0 * c.truth.tau0;
  if (!(std::abs(tau2 / target - 1.0) <= 0.2)) pass = false;
  return {pass, fmt::format("lambda/sqrt(p)={:.2f}  mean {} CP {}  mean tau2 / tau0^2 = {:.3f}",
                            t.mean_lambda_min_over_sqrt_p, vec(mean), vec(cov, 3), tau2 / target)};
}

// 7. Overlapping samples.
Outcome overlap() {
  SimConfig c = summary_config(CausalPreset::beta_a, StrengthPreset::first_weak, 9.25);
  c.truth.overlap_correlation = default_overlap_correlation();
  c.reps = 2000;
  c.seed = kSeed + 7;
  const MetricsTable t = monte_carlo(c, std::vector<Method>{Method::srivw, Method::srivw_overlap});
  bool pass = true;
  const MetricRow& plain = t.row(Method::srivw, 0);
  if (plain.coverage >= 0.90) pass = false;
  Vector cov(3), mean(3);
  for (Index k = 0; k < 3; ++k) {
    cov(k) = t.row(Method::srivw_overlap, k).coverage;
    mean(k) = t.row(Method::srivw_overlap, k).mean_est;
    if (cov(k) < 0.92 || cov(k) > 0.97) pass = false;
  }

  // Zero covariance: corrected and plain estimators agree bit for bit.
  SimConfig z = summary_config(CausalPreset::beta_a, StrengthPreset::first_weak, 9.25);
  z.seed = kSeed + 71;
  bool exact = true;
  for (std::size_t rep = 0; rep < 50; ++rep) {
    const Dataset d = generate_summary(z, rep);
    std::vector<SnpSummary> snps = d.snps();
    for (auto& s : snps) s.cov_xy = Vector::Zero(3);
    const Dataset dz(std::move(snps), d.shared_correlation());
    const TuningResult a = select_phi(d, TuningMode::plain);
    const TuningResult b = select_phi(dz, TuningMode::overlap);
    exact = exact && a.phi_star == b.phi_star && a.selected_estimate.beta == b.selected_estimate.beta &&
            a.selected_estimate.covariance == b.selected_estimate.covariance;
  }
  if (!exact) pass = false;
  return {pass, fmt::format("uncorrected beta1 mean {:.4f} CP {:.3f}; corrected mean {} CP {}; cov_xy = 0 "
                            "bit-exact: {}",
                            plain.mean_est, plain.coverage, vec(mean), vec(cov, 3), exact ? "yes" : "no")};
}

// 8. Individual-level pipeline.
Outcome individual() {
  SimConfig c = individual_config(IndividualParams{}, Vector{{1.0, -0.5, 0.5}}, kSeed + 8);
  c.reps = 1000;
  const MetricsTable t = monte_carlo(c, std::vector<Method>{Method::mv_ivw, Method::srivw});
  bool pass = t.mean_selected >= 95 && t.mean_selected <= 127 && t.mean_lambda_min_over_sqrt_p >= 6 &&
              t.mean_lambda_min_over_sqrt_p <= 10;
  Vector cov(3), mean(3);
  for (Index k = 0; k < 3; ++k) {
    cov(k) = t.row(Method::srivw, k).coverage;
    mean(k) = t.row(Method::srivw, k).mean_est;
    if (cov(k) < 0.92 || cov(k) > 0.98) pass = false;
  }
  return {pass, fmt::format("mean selected {:.1f}, lambda/sqrt(p) {:.2f}, cond F {}, SRIVW mean {} CP {}",
                            t.mean_selected, t.mean_lambda_min_over_sqrt_p, vec(t.mean_conditional_f, 2),
                            vec(mean), vec(cov, 3))};
}

// 9. Tuning contract.
Outcome tuning() {
  std::size_t checked = 0;
  bool in_grid = true;
  for (const double d : {1.0, 2.5, 5.5, 9.25, 15.0}) {
    SimConfig c = summary_config(CausalPreset::beta_a, StrengthPreset::first_weak, d);
    c.seed = kSeed + 9;
    for (std::size_t rep = 0; rep < 40; ++rep) {
      const TuningResult r = select_phi(generate_summary(c, rep), TuningMode::plain);
      const auto grid = grid_b(r.lambda_min_over_sqrt_p);
      in_grid = in_grid && std::find(grid.begin(), grid.end(), r.phi_star) != grid.end();
      ++checked;
    }
  }

  // Strong instruments: the undivided template.
  SimConfig s = summary_config(CausalPreset::beta_a, StrengthPreset::all_similar, 1.0);
  s.seed = kSeed + 91;
  double worst = 0.0;
  double min_lambda = INFINITY;
  std::size_t strong = 0;
  for (std::size_t rep = 0; rep < 100; ++rep) {
    const Dataset d = generate_summary(s, rep);
    const double l = sample_strength_matrix(d).lambda_min_over_sqrt_p;
    if (l <= 17.0) continue;
    ++strong;
    min_lambda = std::min(min_lambda, l);
    const TuningResult r = select_phi(to_instruments(d), l, TuningMode::plain);
    worst = std::max(worst, (r.selected_estimate.beta - srivw(d, 0.0).beta).cwiseAbs().maxCoeff());
  }
  const bool pass = in_grid && strong == 100 && worst < 1e-3;
  return {pass, fmt::format("phi* in B for {}/{} fits: {}; strong datasets {} (min lambda/sqrt(p) {:.1f}), "
                            "max |tuned - srivw(0)| = {:.2e}",
                            checked, checked, in_grid ? "yes" : "no", strong, min_lambda, worst)};
}

// 10. Plant a 50 sigma_Y outlier and recover it.
Outcome outliers() {
  SimConfig c = summary_config(CausalPreset::beta_a, StrengthPreset::first_weak, 2.5);
  c.seed = kSeed + 10;
  const std::size_t reps = 1000;
  std::size_t caught = 0;
  std::size_t false_hits = 0;
  std::size_t clean_total = 0;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    const Dataset d = generate_summary(c, rep);
    std::vector<SnpSummary> snps = d.snps();
    const std::size_t planted = rep % snps.size();
    snps[planted].gamma_y_hat += 50.0 * snps[planted].se_y;
    const std::string planted_id = snps[planted].id;
    const auto [pruned, report] = remove_outliers(Dataset(std::move(snps), d.shared_correlation()));
    bool hit = false;
    for (const auto& id : report.excluded_ids) {
      if (id == planted_id) hit = true;
      else ++false_hits;
    }
    caught += hit;
    clean_total += d.p() - 1;
  }
  const double rate = static_cast<double>(caught) / reps;
  const double false_rate = static_cast<double>(false_hits) / static_cast<double>(clean_total);
  return {rate >= 0.99 && false_rate < 0.01,
          fmt::format("planted SNP excluded in {:.1f}% of reps; clean SNPs excluded {:.3f}%", 100 * rate, 100 * false_rate)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double budget_seconds;  // 0: no runtime bound
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  logger()->set_level(spdlog::level::err);

  const std::vector<Criterion> all = {
      {1, "spectral operator R_phi", spectral_operator, 10},
      {2, "closed-form oracle equivalence", closed_form_oracle, 0},
      {3, "strength-matrix unbiasedness", strength_unbiased, 60},
      {4, "main simulation coverage and IVW bias", table1, 300},
      {5, "MV-IVW probability limit", proposition_limit, 60},
      {6, "balanced pleiotropy extension", pleiotropy, 0},
      {7, "sample overlap extension", overlap, 0},
      {8, "individual-level pipeline", individual, 1200},
      {9, "tuning contract", tuning, 0},
      {10, "outlier plant-and-recover", outliers, 0},
  };
  bool ok = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o.pass = false;
      o.detail += fmt::format("  [over the {:.0f} s budget]", c.budget_seconds);
    }
    std::printf("criterion %d [%s]: %s  %s  (%.1f s)\n", c.id, c.name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
