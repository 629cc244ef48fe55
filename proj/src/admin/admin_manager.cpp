#include "hearth/admin/admin_manager.hpp"

#include "hearth/common/error.hpp"

namespace hearth::admin {

using auth::AccountStatus;
using auth::Permission;

std::vector<auth::AccountSummary> AdminManager::list_pending() const {
  std::vector<auth::AccountSummary> out;
  for (const auto& a : store_.all())
    if (a.status == AccountStatus::pending) out.push_back(auth::summarize(a));
  return out;
}

ApprovalState AdminManager::get_user_approval(const std::string& username) const {
  const auto account = store_.find(username);
  if (!account) throw NotFound("unknown username: " + username);
  return {account->status, account->permission};
}

auth::AccountSummary AdminManager::set_user_approval(const ApprovalDecision& decision) {
  if (decision.status == AccountStatus::pending)
    throw InvalidArgument("an approval decision must activate or disable the account");
  if (decision.status == AccountStatus::active && decision.permission == Permission::none)
    throw InvalidArgument("an active account needs read, write or read_write permission");
  const auto updated = store_.update(decision.username, [&](auth::UserAccount& a) {
    a.status = decision.status;
    a.permission = decision.permission;
  });
  return auth::summarize(updated);
}

}  // namespace hearth::admin
