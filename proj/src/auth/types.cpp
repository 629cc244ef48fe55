#include "hearth/auth/types.hpp"

#include <string>

#include "hearth/common/error.hpp"

namespace hearth::auth {

std::string_view to_string(AccountStatus s) {
  switch (s) {
    case AccountStatus::pending:
      return "pending";
    case AccountStatus::active:
      return "active";
    case AccountStatus::disabled:
      return "disabled";
  }
  return "unknown";
}

std::string_view to_string(Permission p) {
  switch (p) {
    case Permission::none:
      return "none";
    case Permission::read:
      return "read";
    case Permission::write:
      return "write";
    case Permission::read_write:
      return "read_write";
  }
  return "unknown";
}

std::string_view to_string(AuthMode m) {
  switch (m) {
    case AuthMode::mfa:
      return "mfa";
    case AuthMode::face_only:
      return "face_only";
    case AuthMode::password_only:
      return "password_only";
  }
  return "unknown";
}

std::string_view to_string(AuthOutcomeKind k) {
  switch (k) {
    case AuthOutcomeKind::ok:
      return "ok";
    case AuthOutcomeKind::empty_username:
      return "empty_username";
    case AuthOutcomeKind::username_exists:
      return "username_exists";
    case AuthOutcomeKind::username_unknown:
      return "username_unknown";
    case AuthOutcomeKind::empty_password:
      return "empty_password";
    case AuthOutcomeKind::wrong_password:
      return "wrong_password";
    case AuthOutcomeKind::spoofing_detected:
      return "spoofing_detected";
    case AuthOutcomeKind::unrecognized_face:
      return "unrecognized_face";
    case AuthOutcomeKind::account_not_active:
      return "account_not_active";
    case AuthOutcomeKind::password_fallback_available:
      return "password_fallback_available";
  }
  return "unknown";
}

AccountStatus parse_status(std::string_view s) {
  for (auto v : {AccountStatus::pending, AccountStatus::active, AccountStatus::disabled})
    if (to_string(v) == s) return v;
  throw InvalidArgument("unknown account status: " + std::string(s));
}

Permission parse_permission(std::string_view s) {
  for (auto v : {Permission::none, Permission::read, Permission::write, Permission::read_write})
    if (to_string(v) == s) return v;
  throw InvalidArgument("unknown permission: " + std::string(s));
}

AuthMode parse_mode(std::string_view s) {
  for (auto v : {AuthMode::mfa, AuthMode::face_only, AuthMode::password_only})
    if (to_string(v) == s) return v;
  throw InvalidArgument("unknown auth mode: " + std::string(s));
}

AccountSummary summarize(const UserAccount& account) {
  return AccountSummary{account.username, account.status, account.permission, account.created_at};
}

}  // namespace hearth::auth
