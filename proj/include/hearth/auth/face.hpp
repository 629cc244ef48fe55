#pragma once

#include <span>

#include "hearth/auth/types.hpp"

namespace hearth::auth {

inline constexpr double kDefaultMatchThreshold = 0.8;

/// Returns v / ||v||. Throws DegenerateCapture for a (near) zero vector.
Embedding normalized(std::span<const float> v);

/// Mean of the frames, renormalized to unit length. Throws MalformedInput for
/// inconsistent frames and DegenerateCapture when the mean vanishes.
Embedding extract_template(const FaceFrames& frames);

struct MatchResult {
  bool matched = false;
  double similarity = 0.0;
};

/// Cosine similarity of two unit-length embeddings, accepted when
/// similarity >= threshold. Both inputs must already be normalized (within
/// 1e-3); otherwise, or on a dimension mismatch, MalformedInput is thrown.
MatchResult verify_match(std::span<const float> candidate, std::span<const float> face_template,
                         double threshold = kDefaultMatchThreshold);

/// Plug-in boundary for feature extraction (frames -> vector).
class FeatureExtractor {
 public:
  virtual ~FeatureExtractor() = default;
  virtual Embedding extract(const FaceFrames& frames) const = 0;
};

class MeanEmbeddingExtractor final : public FeatureExtractor {
 public:
  Embedding extract(const FaceFrames& frames) const override { return extract_template(frames); }
};

}  // namespace hearth::auth
