#include "hearth/service/sessions.hpp"

#include "hearth/common/encoding.hpp"

namespace hearth::service {

SessionManager::SessionManager(std::chrono::seconds ttl, ClockFn clock)
    : ttl_(ttl), clock_(std::move(clock)) {}

Session SessionManager::issue(const std::string& username, bool is_admin) {
  Session s;
  s.token = to_hex(random_bytes(32));
  s.username = username;
  s.issued_at = clock_();
  s.expires_at = s.issued_at + ttl_;
  s.is_admin = is_admin;
  std::lock_guard lock(mu_);
  sessions_[s.token] = s;
  return s;
}

std::optional<Session> SessionManager::resolve(const std::string& token) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(token);
  if (it == sessions_.end()) return std::nullopt;
  if (clock_() >= it->second.expires_at) {
    sessions_.erase(it);
    return std::nullopt;
  }
  return it->second;
}

void SessionManager::revoke(const std::string& token) {
  std::lock_guard lock(mu_);
  sessions_.erase(token);
}

void SessionManager::revoke_user(const std::string& username) {
  std::lock_guard lock(mu_);
  std::erase_if(sessions_, [&](const auto& kv) { return kv.second.username == username; });
}

std::size_t SessionManager::size() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

}  // namespace hearth::service
