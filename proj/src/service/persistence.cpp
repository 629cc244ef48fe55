#include "hearth/service/persistence.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>

namespace hearth::service {

using json = nlohmann::json;

json account_to_json(const auth::UserAccount& a) {
  return json{{"username", a.username},
              {"salt", to_hex(a.salt)},
              {"password_digest", to_hex(a.password_digest)},
              {"face_template", a.face_template},
              {"status", auth::to_string(a.status)},
              {"permission", auth::to_string(a.permission)},
              {"created_at", format_timestamp(a.created_at)}};
}

auth::UserAccount account_from_json(const json& j) {
  try {
    auth::UserAccount a;
    a.username = j.at("username").get<std::string>();
    if (a.username.empty()) throw MalformedInput("empty username");
    a.salt = from_hex(j.at("salt").get<std::string>());
    if (a.salt.size() != auth::kSaltSize) throw MalformedInput("salt must be 16 bytes");
    const auto digest = from_hex(j.at("password_digest").get<std::string>());
    if (digest.size() != a.password_digest.size()) throw MalformedInput("digest must be 32 bytes");
    std::copy(digest.begin(), digest.end(), a.password_digest.begin());
    a.face_template = j.at("face_template").get<auth::Embedding>();
    a.status = auth::parse_status(j.at("status").get<std::string>());
    a.permission = auth::parse_permission(j.at("permission").get<std::string>());
    a.created_at = parse_timestamp(j.at("created_at").get<std::string>());
    if (a.status == auth::AccountStatus::pending && a.permission != auth::Permission::none)
      throw MalformedInput("pending account with a permission");
    return a;
  } catch (const json::exception& e) {
    throw MalformedInput(e.what());
  } catch (const InvalidArgument& e) {
    throw MalformedInput(e.what());
  }
}

json notification_to_json(const notify::Notification& n) {
  return json{{"id", n.id},
              {"kind", notify::to_string(n.kind)},
              {"username", n.username ? json(*n.username) : json(nullptr)},
              {"image", to_base64(n.image)},
              {"created_at", format_timestamp(n.created_at)},
              {"acknowledged", n.acknowledged}};
}

notify::Notification notification_from_json(const json& j) {
  try {
    notify::Notification n;
    n.id = j.at("id").get<std::uint64_t>();
    if (n.id == 0) throw MalformedInput("notification id must be positive");
    n.kind = notify::parse_notification_kind(j.at("kind").get<std::string>());
    const auto& u = j.at("username");
    if (!u.is_null()) n.username = u.get<std::string>();
    n.image = from_base64(j.at("image").get<std::string>());
    n.created_at = parse_timestamp(j.at("created_at").get<std::string>());
    n.acknowledged = j.at("acknowledged").get<bool>();
    return n;
  } catch (const json::exception& e) {
    throw MalformedInput(e.what());
  } catch (const InvalidArgument& e) {
    throw MalformedInput(e.what());
  }
}

JsonlJournal::JsonlJournal(std::string path) : path_(std::move(path)) {
  const auto parent = std::filesystem::path(path_).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  file_ = std::fopen(path_.c_str(), "ab");
  if (!file_) throw InternalError("cannot open " + path_ + ": " + std::strerror(errno));
}

JsonlJournal::~JsonlJournal() {
  if (file_) std::fclose(file_);
}

void JsonlJournal::append(const json& record) {
  const std::string line = record.dump() + "\n";
  std::lock_guard lock(mu_);
  if (std::fwrite(line.data(), 1, line.size(), file_) != line.size() || std::fflush(file_) != 0)
    throw InternalError("write to " + path_ + " failed: " + std::strerror(errno));
}

namespace {

template <typename Fn>
void replay(const std::string& path, Fn&& on_record) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (!std::filesystem::exists(path)) return;
    throw StartupError("cannot read " + path);
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      on_record(json::parse(line));
    } catch (const std::exception& e) {
      throw StartupError(path + ":" + std::to_string(line_no) + ": malformed record: " + e.what());
    }
  }
}

}  // namespace

std::vector<auth::UserAccount> load_accounts(const std::string& path) {
  std::map<std::string, auth::UserAccount> latest;
  replay(path, [&](const json& j) {
    auto a = account_from_json(j);
    auto name = a.username;
    latest.insert_or_assign(std::move(name), std::move(a));
  });
  std::vector<auth::UserAccount> out;
  for (auto& [_, a] : latest) out.push_back(std::move(a));
  return out;
}

std::vector<notify::Notification> load_notifications(const std::string& path) {
  std::map<std::uint64_t, notify::Notification> latest;
  replay(path, [&](const json& j) {
    auto n = notification_from_json(j);
    latest.insert_or_assign(n.id, std::move(n));
  });
  std::vector<notify::Notification> out;
  for (auto& [_, n] : latest) out.push_back(std::move(n));
  return out;
}

}  // namespace hearth::service
