#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hearth/common/access.hpp"
#include "hearth/common/encoding.hpp"
#include "hearth/common/time.hpp"

namespace hearth::auth {

using Embedding = std::vector<float>;
using Digest = std::array<std::uint8_t, 32>;

inline constexpr std::size_t kDefaultDimension = 128;
inline constexpr std::size_t kSaltSize = 16;

enum class AccountStatus { pending, active, disabled };
enum class Permission { none, read, write, read_write };
enum class AuthMode { mfa, face_only, password_only };

using hearth::AccessClass;
using hearth::to_string;

std::string_view to_string(AccountStatus s);
std::string_view to_string(Permission p);
std::string_view to_string(AuthMode m);
// Parsers throw InvalidArgument on unknown names.
AccountStatus parse_status(std::string_view s);
Permission parse_permission(std::string_view s);
AuthMode parse_mode(std::string_view s);

/// write does not imply read: the grants are read, write, or both.
constexpr bool allows_read(Permission p) { return p == Permission::read || p == Permission::read_write; }
constexpr bool allows_write(Permission p) {
  return p == Permission::write || p == Permission::read_write;
}
constexpr bool permits(Permission p, AccessClass needed) {
  switch (needed) {
    case AccessClass::none:
      return true;
    case AccessClass::read:
      return allows_read(p);
    case AccessClass::write:
      return allows_write(p);
  }
  return false;
}

struct UserAccount {
  std::string username;
  Bytes salt;
  Digest password_digest{};
  Embedding face_template;
  AccountStatus status = AccountStatus::pending;
  Permission permission = Permission::none;
  Timestamp created_at{};

  bool operator==(const UserAccount&) const = default;
};

/// Account view with credentials and biometrics stripped.
struct AccountSummary {
  std::string username;
  AccountStatus status = AccountStatus::pending;
  Permission permission = Permission::none;
  Timestamp created_at{};

  bool operator==(const AccountSummary&) const = default;
};

AccountSummary summarize(const UserAccount& account);

/// Stand-in for the camera stream: one embedding per frame, plus a
/// representative raw frame forwarded with notifications.
struct FaceFrames {
  std::vector<Embedding> frames;
  Bytes capture_image;
};

enum class AuthOutcomeKind {
  ok,
  empty_username,
  username_exists,
  username_unknown,
  empty_password,
  wrong_password,
  spoofing_detected,
  unrecognized_face,
  account_not_active,
  password_fallback_available,
};

std::string_view to_string(AuthOutcomeKind k);

struct AuthOutcome {
  AuthOutcomeKind kind = AuthOutcomeKind::ok;
  std::optional<std::string> session_token;  // only on a successful login
  bool is_admin = false;

  bool ok() const { return kind == AuthOutcomeKind::ok; }
};

}  // namespace hearth::auth
