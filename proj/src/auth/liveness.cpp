#include "hearth/auth/liveness.hpp"

#include <cmath>
#include <string>

#include "hearth/common/error.hpp"
#include "hearth/simd/kernels.hpp"

namespace hearth::auth {

void validate_frames(const FaceFrames& frames, std::optional<std::size_t> dimension) {
  if (frames.frames.empty()) throw MalformedInput("no face frames supplied");
  const std::size_t dim = dimension.value_or(frames.frames.front().size());
  if (dim == 0) throw MalformedInput("face frames are empty vectors");
  for (std::size_t i = 0; i < frames.frames.size(); ++i) {
    const auto& f = frames.frames[i];
    if (f.size() != dim)
      throw MalformedInput("frame " + std::to_string(i) + " has dimension " +
                           std::to_string(f.size()) + ", expected " + std::to_string(dim));
    for (float v : f)
      if (!std::isfinite(v)) throw MalformedInput("frame " + std::to_string(i) + " has a non-finite value");
  }
}

double mean_consecutive_motion(const FaceFrames& frames) {
  const auto& fs = frames.frames;
  if (fs.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 1; i < fs.size(); ++i) total += simd::squared_distance(fs[i - 1], fs[i]);
  return total / static_cast<double>(fs.size() - 1);
}

bool check_liveness(const FaceFrames& frames, const LivenessConfig& cfg) {
  validate_frames(frames);
  if (frames.frames.size() < cfg.min_frames) return false;
  return mean_consecutive_motion(frames) > cfg.motion_epsilon;
}

}  // namespace hearth::auth
