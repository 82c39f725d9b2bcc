#include <doctest.h>

#include <algorithm>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "helpers.hpp"
#include "mvmr/errors.hpp"
#include "mvmr/summary_data.hpp"

using namespace mvmr;
using testing::LogCapture;
using testing::write_temp;

TEST_CASE("load_dataset: minimal K=1 file with default identity correlation") {
  const auto path = write_temp("k1.tsv",
                               "snp\tbeta_x1\tse_x1\tbeta_y\tse_y\n"
                               "a\t0.1\t0.01\t0.2\t0.02\n"
                               "b\t-0.3\t0.02\t0.5\t0.03\n");
  LogCapture log;
  const Dataset d = load_dataset(path, 1);
  CHECK(d.p() == 2);
  CHECK(d.k() == 1);
  CHECK(d.snp(1).id == "b");
  CHECK(d.snp(1).gamma_hat(0) == -0.3);
  CHECK(d.shared_correlation()(0, 0) == 1.0);
  CHECK(log.text().find("identity") != std::string::npos);
}

TEST_CASE("load_dataset: zero SE on row 3 names row 3") {
  const auto path = write_temp("bad_se.tsv",
                               "snp\tbeta_x1\tse_x1\tbeta_y\tse_y\n"
                               "a\t0.1\t0.01\t0.2\t0.02\n"
                               "b\t0.1\t0.01\t0.2\t0.02\n"
                               "c\t0.1\t0\t0.2\t0.02\n");
  try {
    load_dataset(path, 1);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
    CHECK(std::string(e.what()).find("se_x1") != std::string::npos);
  }
}

TEST_CASE("load_dataset: malformed number names the line") {
  const auto path = write_temp("bad_num.tsv",
                               "snp\tbeta_x1\tse_x1\tbeta_y\tse_y\n"
                               "a\t0.1\t0.01\t0.2\t0.02\n"
                               "b\tNA\t0.01\t0.2\t0.02\n");
  try {
    load_dataset(path, 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  const auto short_row = write_temp("short.tsv",
                                    "snp\tbeta_x1\tse_x1\tbeta_y\tse_y\n"
                                    "a\t0.1\t0.01\t0.2\n");
  CHECK_THROWS_AS(load_dataset(short_row, 1), ParseError);
  const auto missing = write_temp("missing.tsv", "snp\tbeta_x1\tbeta_y\tse_y\n");
  CHECK_THROWS_AS(load_dataset(missing, 1), ParseError);
}

TEST_CASE("load_dataset: correlation file must be positive definite") {
  const auto data = write_temp("k2.tsv",
                               "snp\tbeta_x1\tbeta_x2\tse_x1\tse_x2\tbeta_y\tse_y\n"
                               "a\t0.1\t0.2\t0.01\t0.01\t0.2\t0.02\n"
                               "b\t0.3\t0.1\t0.01\t0.01\t0.2\t0.02\n");
  const auto bad = write_temp("corr_bad.txt", "1 1.2\n1.2 1\n");
  CHECK_THROWS_AS(load_dataset(data, 2, bad), ValidationError);
  const auto asym = write_temp("corr_asym.txt", "1 0.2\n0.3 1\n");
  CHECK_THROWS_AS(load_dataset(data, 2, asym), ValidationError);
  const auto good = write_temp("corr_good.txt", "1 0.25\n0.25 1\n");
  const Dataset d = load_dataset(data, 2, good);
  CHECK(d.shared_correlation()(0, 1) == 0.25);
}

TEST_CASE("load_dataset: the 145 x 3 simulation template") {
  const auto path = std::filesystem::path(MVMR_SOURCE_DIR) / "data" / "summary_template.tsv";
  const auto corr = write_temp("corr3.txt", "1 -0.1 -0.05\n-0.1 1 0.2\n-0.05 0.2 1\n");
  const Dataset d = load_dataset(path, 3, corr);
  CHECK(d.p() == 145);
  CHECK(d.k() == 3);
}

TEST_CASE("SnpSummary invariants") {
  SnpSummary s{"x", Vector{{0.1, 0.2}}, Vector{{0.01, 0.02}}, 0.3, 0.05, std::nullopt};
  CHECK_NOTHROW(validate_snp(s, 2, "x"));
  s.cov_xy = Vector{{0.0005, 0.0}};  // |c| = se_x * se_y exactly
  CHECK_NOTHROW(validate_snp(s, 2, "x"));
  s.cov_xy = Vector{{0.0006, 0.0}};
  CHECK_THROWS_AS(validate_snp(s, 2, "x"), ValidationError);
  s.cov_xy.reset();
  s.gamma_y_hat = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(validate_snp(s, 2, "x"), ValidationError);
  s.gamma_y_hat = 0.0;
  s.se_y = -1.0;
  CHECK_THROWS_AS(validate_snp(s, 2, "x"), ValidationError);
  s.se_y = 1.0;
  CHECK_THROWS_AS(validate_snp(s, 3, "x"), ValidationError);
}

TEST_CASE("Dataset requires p >= K") {
  std::vector<SnpSummary> one{{"a", Vector{{0.1, 0.2}}, Vector{{0.01, 0.01}}, 0.0, 0.1, {}}};
  CHECK_THROWS_AS(Dataset(one, Matrix::Identity(2, 2)), ValidationError);
}

TEST_CASE("write_dataset / load_dataset round trip") {
  testing::RandomDataOptions o;
  o.overlap = true;
  const Dataset d = testing::random_dataset(5, o);
  const auto path = testing::temp_path("roundtrip.tsv");
  const auto cpath = testing::temp_path("roundtrip_corr.txt");
  write_dataset(d, path);
  write_correlation(d.shared_correlation(), cpath);
  const Dataset e = load_dataset(path, d.k(), cpath);
  REQUIRE(e.p() == d.p());
  CHECK(e.has_cov_xy());
  for (std::size_t j = 0; j < d.p(); ++j) {
    CHECK(e.snp(j).id == d.snp(j).id);
    // Shortest round-trip formatting reproduces every double exactly,
    // which is stronger than 12 significant digits.
    CHECK(e.snp(j).gamma_hat == d.snp(j).gamma_hat);
    CHECK(e.snp(j).se_x == d.snp(j).se_x);
    CHECK(e.snp(j).gamma_y_hat == d.snp(j).gamma_y_hat);
    CHECK(e.snp(j).se_y == d.snp(j).se_y);
    CHECK(*e.snp(j).cov_xy == *d.snp(j).cov_xy);
  }
  CHECK(e.shared_correlation() == d.shared_correlation());
}

TEST_CASE("build_sigma_xj") {
  CHECK(build_sigma_xj(Vector::Ones(3), Matrix::Identity(3, 3)) == Matrix::Identity(3, 3));
  const Matrix s = build_sigma_xj(Vector{{2.0, 3.0}}, Matrix{{1.0, 0.5}, {0.5, 1.0}});
  CHECK(s == Matrix{{4.0, 3.0}, {3.0, 9.0}});
  const Matrix t = build_sigma_xj(Vector::Ones(2), Matrix{{1.0, -0.1}, {-0.1, 1.0}});
  CHECK(t(0, 1) == doctest::Approx(-0.1));
  CHECK_THROWS_AS(build_sigma_xj(Vector::Ones(2), Matrix::Identity(3, 3)), ValidationError);
}

TEST_CASE("build_sigma_xj eigenvalue lower bound") {
  mvmr::NormalStream rng(11, 1, 0, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix c = testing::random_correlation(4, rng);
    Vector se(4);
    for (Index i = 0; i < 4; ++i) se(i) = 0.1 + std::abs(rng());
    const Matrix s = build_sigma_xj(se, c);
    CHECK(s == s.transpose());
    const double lo_c = Eigen::SelfAdjointEigenSolver<Matrix>(c).eigenvalues()(0);
    const double lo_s = Eigen::SelfAdjointEigenSolver<Matrix>(s).eigenvalues()(0);
    CHECK(lo_s >= se.minCoeff() * se.minCoeff() * lo_c * (1 - 1e-12));
  }
}

TEST_CASE("estimate_shared_correlation") {
  SUBCASE("identical columns give correlation one") {
    Matrix z(50, 2);
    mvmr::NormalStream rng(3, 1, 0, 0);
    for (Index i = 0; i < 50; ++i) z(i, 0) = z(i, 1) = rng();
    LogCapture log;
    const Matrix c = estimate_shared_correlation(z);
    CHECK(c(0, 1) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(c(0, 0) == 1.0);
    CHECK(log.text().find("clipping") != std::string::npos);
  }
  SUBCASE("independent columns at T = 1e5") {
    const Index t = 100000;
    Matrix z(t, 3);
    mvmr::NormalStream rng(4, 1, 0, 0);
    for (Index i = 0; i < z.size(); ++i) z.data()[i] = rng();
    const Matrix c = estimate_shared_correlation(z);
    for (Index a = 0; a < 3; ++a) {
      for (Index b = 0; b < 3; ++b) {
        if (a != b) CHECK(std::abs(c(a, b)) < 0.01);
      }
    }
  }
  SUBCASE("K = 1") {
    Matrix z(10, 1);
    for (Index i = 0; i < 10; ++i) z(i, 0) = static_cast<double>(i * i);
    CHECK(estimate_shared_correlation(z) == Matrix::Ones(1, 1));
  }
  SUBCASE("insufficient data") {
    CHECK_THROWS_AS(estimate_shared_correlation(Matrix::Ones(1, 2)), InsufficientDataError);
    Matrix z(10, 2);
    z.col(0).setLinSpaced(0, 1);
    z.col(1).setConstant(2.0);
    CHECK_THROWS_AS(estimate_shared_correlation(z), InsufficientDataError);
  }
  SUBCASE("few null SNPs warn") {
    Matrix z(5, 2);
    z << 1, 2, 3, 1, 2, 2, 5, 3, 1, 0;
    LogCapture log;
    estimate_shared_correlation(z);
    CHECK(log.text().find("only 5") != std::string::npos);
  }
  SUBCASE("row permutation invariance") {
    Matrix z(200, 3);
    mvmr::NormalStream rng(8, 1, 0, 0);
    for (Index i = 0; i < z.size(); ++i) z.data()[i] = rng();
    z.col(1) += 0.5 * z.col(0);
    std::vector<Index> perm(200);
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    std::rotate(perm.begin(), perm.begin() + 37, perm.end());
    const Matrix zp = z(perm, Eigen::all);
    CHECK(testing::rel_err(estimate_shared_correlation(zp), estimate_shared_correlation(z)) < 1e-12);
  }
}

TEST_CASE("Dataset subset and without") {
  const Dataset d = testing::random_dataset(6);
  const std::vector<std::size_t> drop{0, 5};
  const Dataset e = d.without(drop);
  CHECK(e.p() == d.p() - 2);
  CHECK(e.snp(0).id == d.snp(1).id);
  CHECK(e.snp(4).id == d.snp(6).id);
}
