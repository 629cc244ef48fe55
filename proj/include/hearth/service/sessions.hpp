#pragma once

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "hearth/common/time.hpp"

namespace hearth::service {

struct Session {
  std::string token;  // 32 random bytes, hex
  std::string username;
  Timestamp issued_at{};
  Timestamp expires_at{};
  bool is_admin = false;
};

/// Bearer-token sessions. Sessions hold no permission snapshot; callers look
/// the account up on every request.
class SessionManager {
 public:
  explicit SessionManager(std::chrono::seconds ttl = std::chrono::hours(12), ClockFn clock = now_utc);

  Session issue(const std::string& username, bool is_admin);
  /// Empty for unknown or expired tokens; expired sessions are dropped.
  std::optional<Session> resolve(const std::string& token);
  void revoke(const std::string& token);
  /// Drops every session of `username`.
  void revoke_user(const std::string& username);
  std::size_t size() const;

 private:
  std::chrono::seconds ttl_;
  ClockFn clock_;
  mutable std::mutex mu_;
  std::map<std::string, Session> sessions_;
};

}  // namespace hearth::service
