#pragma once

#include <cstdio>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "hearth/auth/types.hpp"
#include "hearth/common/error.hpp"
#include "hearth/notify/notification.hpp"

namespace hearth::service {

// On-disk layout: newline-delimited JSON, one full record per version.
// Loading replays the file and keeps the last version of each key.
//
//   accounts.jsonl       {"username", "salt" (hex), "password_digest" (hex),
//                         "face_template" [floats], "status", "permission",
//                         "created_at" (ISO-8601 UTC)}
//   notifications.jsonl  {"id", "kind", "username" (string|null),
//                         "image" (base64), "created_at", "acknowledged"}

inline constexpr const char* kAccountsFile = "accounts.jsonl";
inline constexpr const char* kNotificationsFile = "notifications.jsonl";

/// Corrupt persisted state; the message names file and line.
class StartupError : public Error {
 public:
  using Error::Error;
};

nlohmann::json account_to_json(const auth::UserAccount& a);
/// Throws MalformedInput.
auth::UserAccount account_from_json(const nlohmann::json& j);

nlohmann::json notification_to_json(const notify::Notification& n);
notify::Notification notification_from_json(const nlohmann::json& j);

/// Append-only writer. Each append is one line, flushed before returning.
class JsonlJournal {
 public:
  explicit JsonlJournal(std::string path);
  ~JsonlJournal();
  JsonlJournal(const JsonlJournal&) = delete;
  JsonlJournal& operator=(const JsonlJournal&) = delete;

  /// Throws InternalError on I/O failure.
  void append(const nlohmann::json& record);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::mutex mu_;
  std::FILE* file_ = nullptr;
};

/// Replays a journal. A missing file is an empty store. Blank lines are
/// skipped; anything else that is not a valid record throws StartupError.
std::vector<auth::UserAccount> load_accounts(const std::string& path);
std::vector<notify::Notification> load_notifications(const std::string& path);

}  // namespace hearth::service
