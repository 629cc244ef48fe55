#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hearth/auth/types.hpp"
#include "hearth/service/hub.hpp"

namespace hearth::service {

/// Deterministic unit "face" for a user: a Gaussian vector seeded by
/// (seed, username), normalized.
auth::Embedding demo_face(std::uint64_t seed, const std::string& username, std::size_t dimension);

/// `count` jittered copies of `base`, the way a live camera would see it.
auth::FaceFrames live_frames(const auth::Embedding& base, std::size_t count, double jitter,
                             std::uint64_t seed);

/// `count` identical copies of `base`: a photo held up to the camera.
auth::FaceFrames still_frames(const auth::Embedding& base, std::size_t count);

/// Placeholder capture image: a tiny PGM labeled with the user.
Bytes demo_capture(const std::string& label);

/// Registers and approves the demo residents through the regular API:
/// resident (read_write), guest (read) and newcomer (left pending).
/// Existing accounts are left alone. Returns {username: {password, face}}.
nlohmann::json seed_demo_accounts(Hub& hub);

}  // namespace hearth::service
