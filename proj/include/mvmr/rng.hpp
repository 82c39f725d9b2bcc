#pragma once

#include <array>
#include <cstdint>
#include <cmath>
#include <limits>

namespace mvmr {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A stream is
// identified by (key, stream id); the low counter word advances per block,
// so streams never overlap for fewer than 2^32 blocks.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;

  Philox4x32(std::uint64_t key, std::uint32_t s0, std::uint32_t s1, std::uint32_t s2)
      : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)},
        ctr_{0, s0, s1, s2} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (pos_ == 4) {
      refill();
    }
    return out_[pos_++];
  }

  // Raw block function, exposed for known-answer tests.
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key);

 private:
  void refill() {
    out_ = block(ctr_, key_);
    ++ctr_[0];
    pos_ = 0;
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> out_{};
  int pos_ = 4;
};

inline std::array<std::uint32_t, 4> Philox4x32::block(std::array<std::uint32_t, 4> ctr,
                                                      std::array<std::uint32_t, 2> key) {
  constexpr std::uint64_t m0 = 0xD2511F53u;
  constexpr std::uint64_t m1 = 0xCD9E8D57u;
  constexpr std::uint32_t w0 = 0x9E3779B9u;
  constexpr std::uint32_t w1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = m0 * ctr[0];
    const std::uint64_t p1 = m1 * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    key[0] += w0;
    key[1] += w1;
  }
  return ctr;
}

// Standard normal via the Marsaglia polar method; unlike
// std::normal_distribution its output is fixed across standard libraries.
template <class Engine>
double standard_normal(Engine& eng, double& spare, bool& has_spare) {
  if (has_spare) {
    has_spare = false;
    return spare;
  }
  constexpr double scale = 1.0 / 4294967296.0;
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = (static_cast<double>(eng()) + 0.5) * scale * 2.0 - 1.0;
    v = (static_cast<double>(eng()) + 0.5) * scale * 2.0 - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare = v * m;
  has_spare = true;
  return u * m;
}

class NormalStream {
 public:
  NormalStream(std::uint64_t key, std::uint32_t s0, std::uint32_t s1, std::uint32_t s2)
      : eng_(key, s0, s1, s2) {}

  double operator()() { return standard_normal(eng_, spare_, has_spare_); }
  Philox4x32& engine() { return eng_; }

 private:
  Philox4x32 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mvmr
