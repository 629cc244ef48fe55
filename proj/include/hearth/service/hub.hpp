#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "hearth/admin/admin_manager.hpp"
#include "hearth/auth/account_store.hpp"
#include "hearth/auth/login_manager.hpp"
#include "hearth/broker/broker.hpp"
#include "hearth/chat/chatbot.hpp"
#include "hearth/common/error.hpp"
#include "hearth/notify/notification_log.hpp"
#include "hearth/service/config.hpp"
#include "hearth/service/persistence.hpp"
#include "hearth/service/sessions.hpp"
#include "hearth/things/simulator.hpp"
#include "hearth/things/things_manager.hpp"

namespace hearth::service {

/// Access an endpoint demands of the caller.
enum class Requirement { session, read, write, admin };

std::string_view to_string(Requirement r);

struct Principal {
  std::string username;
  auth::Permission permission = auth::Permission::none;
  bool is_admin = false;
};

/// Bad, expired or revoked token, or an account that is no longer active.
class Unauthorized : public Error {
 public:
  using Error::Error;
};

class Forbidden : public Error {
 public:
  using Error::Error;
};

/// HTTP status plus JSON body.
struct Reply {
  int status = 200;
  nlohmann::json body;
};

/// Status code for an authentication outcome.
int status_of(auth::AuthOutcomeKind kind);

/// Composition root: owns every module and exposes the API as plain calls
/// taking and returning JSON, so the HTTP layer stays a thin adapter and
/// tests can drive the service without sockets.
///
/// Construction loads the data directory; a corrupt journal throws
/// StartupError.
class Hub {
 public:
  explicit Hub(ServiceConfig cfg, ClockFn clock = now_utc);
  ~Hub();
  Hub(const Hub&) = delete;
  Hub& operator=(const Hub&) = delete;

  /// Throws Unauthorized or Forbidden.
  Principal authorize(const std::string& token, Requirement need);

  Reply register_user(const nlohmann::json& body);
  Reply login(const nlohmann::json& body);
  Reply chat(const std::string& token, const nlohmann::json& body);
  Reply devices(const std::string& token);
  Reply command(const std::string& token, const std::string& device_id, const nlohmann::json& body);
  Reply pending(const std::string& token);
  Reply notifications(const std::string& token, std::optional<std::uint64_t> since_id);
  Reply approval(const std::string& token, const nlohmann::json& body);
  Reply acknowledge(const std::string& token, std::uint64_t id);

  /// Observable persisted state: accounts and notifications as stored.
  nlohmann::json snapshot() const;

  const ServiceConfig& config() const { return cfg_; }
  auth::AccountStore& accounts() { return accounts_; }
  notify::NotificationLog& notification_log() { return notifications_; }
  SessionManager& sessions() { return sessions_; }
  auth::LoginManager& login_manager() { return *login_; }
  broker::Broker& broker() { return broker_; }
  things::Roster& roster() { return roster_; }
  things::Simulator& simulator() { return *simulator_; }
  chat::Chatbot& chatbot() { return *chatbot_; }

 private:
  template <typename Fn>
  Reply guarded(Fn&& fn);

  ServiceConfig cfg_;
  ClockFn clock_;
  SessionManager sessions_;
  auth::AccountStore accounts_;
  notify::NotificationLog notifications_;
  std::unique_ptr<JsonlJournal> account_journal_;
  std::unique_ptr<JsonlJournal> notification_journal_;
  std::unique_ptr<auth::LoginManager> login_;
  std::unique_ptr<admin::AdminManager> admin_;
  broker::Broker broker_;
  things::Roster roster_;
  std::unique_ptr<things::Simulator> simulator_;
  std::unique_ptr<things::ThingsManager> things_;
  std::unique_ptr<chat::Chatbot> chatbot_;
};

/// Entity lexicon for a home: the built-in device synonyms plus each room's
/// synonyms bound to its slot.
chat::EntityLexicon build_lexicon(const std::vector<things::RoomSpec>& rooms);

nlohmann::json to_json(const auth::AccountSummary& s);
nlohmann::json to_json(const notify::Notification& n);
nlohmann::json to_json(const things::DeviceReading& r);
nlohmann::json to_json(const chat::ChatIntent& intent);

/// Parses {frames: [[f32]], image_b64}. Throws MalformedInput.
auth::FaceFrames parse_face_frames(const nlohmann::json& body);

}  // namespace hearth::service
