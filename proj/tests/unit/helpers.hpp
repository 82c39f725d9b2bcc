#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <spdlog/sinks/ringbuffer_sink.h>
#include <spdlog/spdlog.h>

#include "mvmr/log.hpp"
#include "mvmr/rng.hpp"
#include "mvmr/summary_data.hpp"

namespace testing {

using mvmr::Index;
using mvmr::Matrix;
using mvmr::Vector;

inline std::filesystem::path temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "mvmr_unit";
  std::filesystem::create_directories(dir);
  return dir / name;
}

inline std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = temp_path(name);
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

inline double rel_err(const Matrix& a, const Matrix& b) {
  const double scale = std::max(b.cwiseAbs().maxCoeff(), 1e-300);
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

// Random K x K correlation matrix with eigenvalues bounded away from zero.
inline Matrix random_correlation(Index k, mvmr::NormalStream& rng) {
  Matrix a(k, k + 2);
  for (Index i = 0; i < a.size(); ++i) a.data()[i] = rng();
  Matrix c = a * a.transpose() + Matrix::Identity(k, k) * static_cast<double>(k);
  const Vector d = c.diagonal().cwiseSqrt().cwiseInverse();
  c = d.asDiagonal() * c * d.asDiagonal();
  c.diagonal().setOnes();
  return 0.5 * (c + c.transpose());
}

struct RandomDataOptions {
  Index p = 50;
  Index k = 3;
  double signal = 0.2;
  double se_x = 0.02;
  double se_y = 0.03;
  bool overlap = false;
};

// Dataset with true effects of order `signal` plus Gaussian noise.
inline mvmr::Dataset random_dataset(std::uint64_t seed, const RandomDataOptions& o = {}) {
  mvmr::NormalStream rng(seed, 99, 0, 0);
  const Matrix sigma = random_correlation(o.k, rng);
  Vector beta(o.k);
  for (Index i = 0; i < o.k; ++i) beta(i) = rng() * 0.5;
  std::vector<mvmr::SnpSummary> snps;
  for (Index j = 0; j < o.p; ++j) {
    mvmr::SnpSummary s;
    s.id = "rs" + std::to_string(j + 1);
    s.gamma_hat.resize(o.k);
    s.se_x.resize(o.k);
    Vector g(o.k);
    for (Index i = 0; i < o.k; ++i) {
      g(i) = o.signal * rng();
      s.se_x(i) = o.se_x * (0.5 + std::abs(rng()));
      s.gamma_hat(i) = g(i) + s.se_x(i) * rng();
    }
    s.se_y = o.se_y * (0.5 + std::abs(rng()));
    s.gamma_y_hat = g.dot(beta) + s.se_y * rng();
    if (o.overlap) {
      Vector c(o.k);
      for (Index i = 0; i < o.k; ++i) c(i) = 0.3 * std::tanh(rng()) * s.se_x(i) * s.se_y;
      s.cov_xy = c;
    }
    snps.push_back(std::move(s));
  }
  return mvmr::Dataset(std::move(snps), sigma);
}

// Captures library log output for the lifetime of the object.
class LogCapture {
 public:
  LogCapture() : sink_(std::make_shared<spdlog::sinks::ringbuffer_sink_mt>(256)) {
    saved_ = mvmr::logger();
    auto l = std::make_shared<spdlog::logger>("mvmr", sink_);
    l->set_level(spdlog::level::debug);
    l->set_pattern("%l: %v");
    mvmr::set_logger(l);
  }
  ~LogCapture() { mvmr::set_logger(saved_); }

  std::string text() const {
    std::string out;
    for (const auto& s : sink_->last_formatted()) out += s;
    return out;
  }

 private:
  std::shared_ptr<spdlog::sinks::ringbuffer_sink_mt> sink_;
  std::shared_ptr<spdlog::logger> saved_;
};

}  // namespace testing
