#include "hearth/auth/face.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hearth/auth/liveness.hpp"
#include "hearth/common/error.hpp"
#include "hearth/simd/kernels.hpp"

namespace hearth::auth {
namespace {

constexpr double kMinSquaredNorm = 1e-12;
constexpr double kUnitTolerance = 1e-3;

}  // namespace

Embedding normalized(std::span<const float> v) {
  const double n2 = simd::squared_norm_wide(v);
  if (!(n2 > kMinSquaredNorm)) throw DegenerateCapture("embedding has zero length");
  Embedding out(v.begin(), v.end());
  simd::scale(out, static_cast<float>(1.0 / std::sqrt(n2)));
  return out;
}

Embedding extract_template(const FaceFrames& frames) {
  validate_frames(frames);
  Embedding mean(frames.frames.front().size(), 0.0f);
  for (const auto& f : frames.frames) simd::accumulate(mean, f);
  simd::scale(mean, 1.0f / static_cast<float>(frames.frames.size()));
  try {
    return normalized(mean);
  } catch (const DegenerateCapture&) {
    throw DegenerateCapture("captured frames average to a zero vector");
  }
}

MatchResult verify_match(std::span<const float> candidate, std::span<const float> face_template,
                         double threshold) {
  if (candidate.size() != face_template.size())
    throw MalformedInput("embedding dimension mismatch: " + std::to_string(candidate.size()) +
                         " vs " + std::to_string(face_template.size()));
  if (candidate.empty()) throw MalformedInput("empty embedding");
  for (auto v : {candidate, face_template}) {
    if (std::abs(std::sqrt(simd::squared_norm_wide(v)) - 1.0) > kUnitTolerance)
      throw MalformedInput("embedding is not unit length");
  }
  // Unit vectors: the inner product is the cosine.
  const double sim = std::clamp(static_cast<double>(simd::dot(candidate, face_template)), -1.0, 1.0);
  return MatchResult{sim >= threshold, sim};
}

}  // namespace hearth::auth
