#include "hearth/service/demo.hpp"

#include <functional>
#include <random>

#include "hearth/auth/face.hpp"
#include "hearth/common/encoding.hpp"

namespace hearth::service {

using json = nlohmann::json;

auth::Embedding demo_face(std::uint64_t seed, const std::string& username, std::size_t dimension) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(std::hash<std::string>{}(username))};
  std::mt19937_64 rng(seq);
  std::normal_distribution<float> gauss(0.0f, 1.0f);
  auth::Embedding v(dimension);
  for (auto& x : v) x = gauss(rng);
  return auth::normalized(v);
}

auth::FaceFrames live_frames(const auth::Embedding& base, std::size_t count, double jitter,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> noise(static_cast<float>(-jitter), static_cast<float>(jitter));
  auth::FaceFrames f;
  for (std::size_t i = 0; i < count; ++i) {
    auth::Embedding e = base;
    for (auto& x : e) x += noise(rng);
    f.frames.push_back(std::move(e));
  }
  return f;
}

auth::FaceFrames still_frames(const auth::Embedding& base, std::size_t count) {
  auth::FaceFrames f;
  f.frames.assign(count, base);
  return f;
}

Bytes demo_capture(const std::string& label) {
  std::string pgm = "P2\n# " + label + "\n2 2\n255\n0 255\n255 0\n";
  return to_bytes(pgm);
}

json seed_demo_accounts(Hub& hub) {
  struct Seed {
    const char* username;
    const char* password;
    const char* permission;  // nullptr: leave pending
  };
  static constexpr Seed kSeeds[] = {
      {"resident", "resident-pass", "read_write"},
      {"guest", "guest-pass", "read"},
      {"newcomer", "newcomer-pass", nullptr},
  };

  const auto& cfg = hub.config();
  const std::size_t frames = std::max<std::size_t>(cfg.auth.liveness.min_frames, 3);
  json out = json::object();
  std::string admin_token;
  for (const auto& s : kSeeds) {
    const auto face = demo_face(cfg.seed, s.username, cfg.auth.dimension);
    out[s.username] = json{{"password", s.password}, {"face", face}};
    if (hub.accounts().exists(s.username)) continue;

    auto f = live_frames(face, frames, 0.01, cfg.seed);
    json body{{"username", s.username},
              {"password", s.password},
              {"frames", f.frames},
              {"image_b64", to_base64(demo_capture(s.username))}};
    const Reply r = hub.register_user(body);
    if (r.status != 200) throw InternalError("demo registration failed: " + r.body.dump());
    if (!s.permission) continue;

    if (admin_token.empty()) {
      const Reply a = hub.login(json{{"username", cfg.admin.username}, {"password", cfg.admin.password}});
      if (a.status != 200) throw InternalError("demo admin login failed: " + a.body.dump());
      admin_token = a.body.at("token").get<std::string>();
    }
    const Reply ap = hub.approval(
        admin_token, json{{"username", s.username}, {"status", "active"}, {"permission", s.permission}});
    if (ap.status != 200) throw InternalError("demo approval failed: " + ap.body.dump());
  }
  return out;
}

}  // namespace hearth::service
