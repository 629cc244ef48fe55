#pragma once

#include <string>
#include <vector>

#include "hearth/auth/account_store.hpp"
#include "hearth/auth/types.hpp"

namespace hearth::admin {

struct ApprovalDecision {
  std::string username;
  auth::AccountStatus status = auth::AccountStatus::active;
  auth::Permission permission = auth::Permission::none;
};

struct ApprovalState {
  auth::AccountStatus status = auth::AccountStatus::pending;
  auth::Permission permission = auth::Permission::none;

  bool operator==(const ApprovalState&) const = default;
};

/// Pending-account review and permission assignment. Callers are expected to
/// have authorized the admin already.
class AdminManager {
 public:
  explicit AdminManager(auth::AccountStore& store) : store_(store) {}

  /// Pending accounts, oldest first, with credentials stripped.
  std::vector<auth::AccountSummary> list_pending() const;

  /// Throws NotFound.
  ApprovalState get_user_approval(const std::string& username) const;

  /// Throws NotFound for unknown users and InvalidArgument for status=pending
  /// or an active account without permission.
  auth::AccountSummary set_user_approval(const ApprovalDecision& decision);

 private:
  auth::AccountStore& store_;
};

}  // namespace hearth::admin
