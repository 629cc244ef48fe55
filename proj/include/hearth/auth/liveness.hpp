#pragma once

#include <cstddef>
#include <optional>

#include "hearth/auth/types.hpp"

namespace hearth::auth {

struct LivenessConfig {
  std::size_t min_frames = 3;     // K
  double motion_epsilon = 1e-6;   // ε, on mean squared inter-frame distance
};

/// Throws MalformedInput unless there is at least one frame, all frames share
/// one dimension (equal to `dimension` when given) and every value is finite.
void validate_frames(const FaceFrames& frames, std::optional<std::size_t> dimension = std::nullopt);

/// Mean squared Euclidean distance between consecutive frames; 0 for fewer
/// than two frames.
double mean_consecutive_motion(const FaceFrames& frames);

/// Motion-analysis reference check: live iff there are at least K frames and
/// the mean consecutive motion exceeds ε. A replayed still yields identical
/// frames and zero motion.
bool check_liveness(const FaceFrames& frames, const LivenessConfig& cfg);

/// Plug-in boundary for liveness verdicts (frames -> bool).
class LivenessDetector {
 public:
  virtual ~LivenessDetector() = default;
  virtual bool is_live(const FaceFrames& frames) const = 0;
};

class MotionLivenessDetector final : public LivenessDetector {
 public:
  explicit MotionLivenessDetector(LivenessConfig cfg = {}) : cfg_(cfg) {}
  bool is_live(const FaceFrames& frames) const override { return check_liveness(frames, cfg_); }
  const LivenessConfig& config() const { return cfg_; }

 private:
  LivenessConfig cfg_;
};

}  // namespace hearth::auth
