#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "hearth/auth/account_store.hpp"
#include "hearth/auth/face.hpp"
#include "hearth/auth/liveness.hpp"
#include "hearth/auth/types.hpp"
#include "hearth/notify/notification_log.hpp"

namespace hearth::auth {

struct AuthConfig {
  AuthMode mode = AuthMode::mfa;
  LivenessConfig liveness;
  std::size_t dimension = kDefaultDimension;
  double match_threshold = kDefaultMatchThreshold;
};

/// Produces the bearer token handed back on a successful login.
using TokenIssuer = std::function<std::string(const std::string& username, bool is_admin)>;

/// Registration and log-in orchestration.
///
/// Checks run in a fixed order and the first failing check decides the
/// outcome. Registration:
///   empty username -> taken username -> empty password -> hash ->
///   liveness (spoofing_attack notice) -> create pending account
///   (approval_request notice).
/// Log-in (mfa):
///   empty username -> unknown username -> empty password ->
///   digest mismatch (wrong_password notice) -> liveness (spoofing_attack
///   notice) -> face match (unrecognized_face notice) -> account active.
/// password_only stops after the digest check; face_only skips the password
/// checks and answers a face mismatch with password_fallback_available.
///
/// The bootstrap admin is not a stored account. It always logs in with its
/// password alone and its name counts as taken for registration.
class LoginManager {
 public:
  LoginManager(AccountStore& store, notify::NotificationLog& notifications, AuthConfig cfg,
               TokenIssuer issuer = {},
               std::shared_ptr<const LivenessDetector> liveness = nullptr,
               std::shared_ptr<const FeatureExtractor> extractor = nullptr,
               ClockFn clock = now_utc);

  void set_admin(const std::string& username, const std::string& password);
  bool is_admin_name(const std::string& username) const;

  AuthOutcome register_user(const std::string& username, const std::string& password,
                            const FaceFrames& frames);

  /// Uses the configured mode.
  AuthOutcome login(const std::string& username, const std::optional<std::string>& password,
                    const FaceFrames& frames);
  AuthOutcome login(const std::string& username, const std::optional<std::string>& password,
                    const FaceFrames& frames, AuthMode mode);

  const AuthConfig& config() const { return cfg_; }

 private:
  struct AdminCredential {
    std::string username;
    Bytes salt;
    Digest digest{};
  };

  AuthOutcome admin_login(const std::optional<std::string>& password, const FaceFrames& frames);
  AuthOutcome success(const std::string& username, bool is_admin) const;
  void notify(notify::NotificationKind kind, std::optional<std::string> username,
              const FaceFrames& frames);

  AccountStore& store_;
  notify::NotificationLog& notifications_;
  AuthConfig cfg_;
  TokenIssuer issuer_;
  std::shared_ptr<const LivenessDetector> liveness_;
  std::shared_ptr<const FeatureExtractor> extractor_;
  ClockFn clock_;
  std::optional<AdminCredential> admin_;
};

}  // namespace hearth::auth
