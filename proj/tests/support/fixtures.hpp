#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include <unistd.h>

#include "hearth/auth/types.hpp"
#include "hearth/common/time.hpp"

namespace hearth::testing {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag = "hearth") {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            (tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

/// Manually advanced clock.
class FakeClock {
 public:
  explicit FakeClock(Timestamp start = Timestamp(std::chrono::seconds(1700000000))) : now_(start) {}
  ClockFn fn() {
    return [this] { return now_.load(); };
  }
  void advance(std::chrono::microseconds d) { now_ = now_.load() + d; }
  Timestamp now() const { return now_; }

 private:
  std::atomic<Timestamp> now_;
};

inline auth::Embedding random_unit(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  auth::Embedding v(dim);
  double n = 0.0;
  for (auto& x : v) {
    x = static_cast<float>(g(rng));
    n += double(x) * x;
  }
  n = std::sqrt(n);
  for (auto& x : v) x = static_cast<float>(x / n);
  return v;
}

/// A unit vector orthogonal to `base` (Gram-Schmidt on a random draw).
inline auth::Embedding orthogonal_unit(const auth::Embedding& base, std::mt19937_64& rng) {
  auto v = random_unit(rng, base.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) d += double(v[i]) * base[i];
  double n = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = static_cast<float>(v[i] - d * base[i]);
    n += double(v[i]) * v[i];
  }
  n = std::sqrt(n);
  for (auto& x : v) x = static_cast<float>(x / n);
  return v;
}

/// `count` frames of `base` with small uniform jitter: a live capture.
inline auth::FaceFrames jittered(const auth::Embedding& base, std::size_t count, std::mt19937_64& rng,
                                 float amplitude = 0.01f) {
  std::uniform_real_distribution<float> u(-amplitude, amplitude);
  auth::FaceFrames f;
  for (std::size_t i = 0; i < count; ++i) {
    auto e = base;
    for (auto& x : e) x += u(rng);
    f.frames.push_back(std::move(e));
  }
  f.capture_image = {0xff, 0xd8, static_cast<std::uint8_t>(count)};
  return f;
}

/// `count` identical frames: a replayed photo.
inline auth::FaceFrames replayed(const auth::Embedding& base, std::size_t count) {
  auth::FaceFrames f;
  f.frames.assign(count, base);
  f.capture_image = {0xff, 0xd8, 0x00};
  return f;
}

}  // namespace hearth::testing
