#include "hearth/auth/login_manager.hpp"

#include "hearth/auth/hashing.hpp"
#include "hearth/common/error.hpp"

namespace hearth::auth {

using notify::NotificationKind;

namespace {

AuthOutcome outcome(AuthOutcomeKind kind) {
  AuthOutcome o;
  o.kind = kind;
  return o;
}

}  // namespace

LoginManager::LoginManager(AccountStore& store, notify::NotificationLog& notifications,
                           AuthConfig cfg, TokenIssuer issuer,
                           std::shared_ptr<const LivenessDetector> liveness,
                           std::shared_ptr<const FeatureExtractor> extractor, ClockFn clock)
    : store_(store),
      notifications_(notifications),
      cfg_(cfg),
      issuer_(std::move(issuer)),
      liveness_(liveness ? std::move(liveness)
                         : std::make_shared<MotionLivenessDetector>(cfg.liveness)),
      extractor_(extractor ? std::move(extractor) : std::make_shared<MeanEmbeddingExtractor>()),
      clock_(std::move(clock)) {
  if (cfg_.dimension == 0) throw InvalidArgument("embedding dimension must be positive");
  if (!(cfg_.match_threshold > 0.0)) throw InvalidArgument("match threshold must be positive");
  if (!(cfg_.liveness.motion_epsilon > 0.0)) throw InvalidArgument("liveness epsilon must be positive");
  if (cfg_.liveness.min_frames == 0) throw InvalidArgument("liveness frame count must be positive");
}

void LoginManager::set_admin(const std::string& username, const std::string& password) {
  if (username.empty() || password.empty())
    throw InvalidArgument("admin username and password must not be empty");
  AdminCredential cred{username, new_salt(), {}};
  cred.digest = hash_password(password, cred.salt);
  admin_ = std::move(cred);
}

bool LoginManager::is_admin_name(const std::string& username) const {
  return admin_ && admin_->username == username;
}

void LoginManager::notify(NotificationKind kind, std::optional<std::string> username,
                          const FaceFrames& frames) {
  notifications_.emit(kind, std::move(username), frames.capture_image);
}

AuthOutcome LoginManager::success(const std::string& username, bool is_admin) const {
  AuthOutcome out{AuthOutcomeKind::ok, std::nullopt, is_admin};
  if (issuer_) out.session_token = issuer_(username, is_admin);
  return out;
}

AuthOutcome LoginManager::register_user(const std::string& username, const std::string& password,
                                        const FaceFrames& frames) {
  if (username.empty()) return outcome(AuthOutcomeKind::empty_username);
  if (is_admin_name(username) || store_.exists(username)) return outcome(AuthOutcomeKind::username_exists);
  if (password.empty()) return outcome(AuthOutcomeKind::empty_password);

  Bytes salt = new_salt();
  const Digest digest = hash_password(password, salt);

  validate_frames(frames, cfg_.dimension);
  if (!liveness_->is_live(frames)) {
    // No account exists yet, so the notice carries no username.
    notify(NotificationKind::spoofing_attack, std::nullopt, frames);
    return outcome(AuthOutcomeKind::spoofing_detected);
  }

  Embedding face = extractor_->extract(frames);
  if (face.size() != cfg_.dimension) throw InternalError("feature extractor changed the dimension");

  UserAccount account;
  account.username = username;
  account.salt = std::move(salt);
  account.password_digest = digest;
  account.face_template = std::move(face);
  account.status = AccountStatus::pending;
  account.permission = Permission::none;
  account.created_at = clock_();
  if (!store_.insert(std::move(account))) return outcome(AuthOutcomeKind::username_exists);

  notify(NotificationKind::approval_request, username, frames);
  return outcome(AuthOutcomeKind::ok);
}

AuthOutcome LoginManager::login(const std::string& username,
                                const std::optional<std::string>& password,
                                const FaceFrames& frames) {
  return login(username, password, frames, cfg_.mode);
}

AuthOutcome LoginManager::admin_login(const std::optional<std::string>& password,
                                      const FaceFrames& frames) {
  if (!password || password->empty()) return outcome(AuthOutcomeKind::empty_password);
  if (!digest_equal(hash_password(*password, admin_->salt), admin_->digest)) {
    notify(NotificationKind::wrong_password, admin_->username, frames);
    return outcome(AuthOutcomeKind::wrong_password);
  }
  return success(admin_->username, true);
}

AuthOutcome LoginManager::login(const std::string& username,
                                const std::optional<std::string>& password,
                                const FaceFrames& frames, AuthMode mode) {
  if (username.empty()) return outcome(AuthOutcomeKind::empty_username);
  if (is_admin_name(username)) return admin_login(password, frames);

  const auto account = store_.find(username);
  if (!account) return outcome(AuthOutcomeKind::username_unknown);

  if (mode != AuthMode::face_only) {
    if (!password || password->empty()) return outcome(AuthOutcomeKind::empty_password);
    if (!digest_equal(hash_password(*password, account->salt), account->password_digest)) {
      notify(NotificationKind::wrong_password, username, frames);
      return outcome(AuthOutcomeKind::wrong_password);
    }
  }

  if (mode != AuthMode::password_only) {
    validate_frames(frames, cfg_.dimension);
    if (!liveness_->is_live(frames)) {
      notify(NotificationKind::spoofing_attack, username, frames);
      return outcome(AuthOutcomeKind::spoofing_detected);
    }
    const Embedding candidate = extractor_->extract(frames);
    const MatchResult match = verify_match(candidate, account->face_template, cfg_.match_threshold);
    if (!match.matched) {
      notify(NotificationKind::unrecognized_face, username, frames);
      return outcome(mode == AuthMode::face_only ? AuthOutcomeKind::password_fallback_available
                                                 : AuthOutcomeKind::unrecognized_face);
    }
  }

  // Activation gate: evaluated last so the biometric notices above still fire.
  if (account->status != AccountStatus::active) return outcome(AuthOutcomeKind::account_not_active);
  return success(username, false);
}

}  // namespace hearth::auth
