#include "hearth/auth/account_store.hpp"

#include <algorithm>
#include <mutex>

#include "hearth/common/error.hpp"

namespace hearth::auth {

void AccountStore::set_journal(Journal journal) {
  std::unique_lock lock(mu_);
  journal_ = std::move(journal);
}

void AccountStore::restore(std::vector<UserAccount> accounts) {
  std::unique_lock lock(mu_);
  accounts_.clear();
  for (auto& a : accounts) {
    auto name = a.username;
    accounts_.insert_or_assign(std::move(name), std::move(a));
  }
}

bool AccountStore::exists(const std::string& username) const {
  std::shared_lock lock(mu_);
  return accounts_.contains(username);
}

std::optional<UserAccount> AccountStore::find(const std::string& username) const {
  std::shared_lock lock(mu_);
  auto it = accounts_.find(username);
  if (it == accounts_.end()) return std::nullopt;
  return it->second;
}

void AccountStore::journal_or_throw(const UserAccount& a) const {
  if (!journal_) return;
  try {
    journal_(a);
  } catch (const std::exception& e) {
    throw InternalError(std::string("failed to persist account: ") + e.what());
  }
}

bool AccountStore::insert(UserAccount account) {
  if (account.username.empty()) throw InvalidArgument("username must not be empty");
  std::unique_lock lock(mu_);
  if (accounts_.contains(account.username)) return false;
  journal_or_throw(account);
  auto name = account.username;
  accounts_.emplace(std::move(name), std::move(account));
  return true;
}

UserAccount AccountStore::update(const std::string& username,
                                 const std::function<void(UserAccount&)>& mutate) {
  std::unique_lock lock(mu_);
  auto it = accounts_.find(username);
  if (it == accounts_.end()) throw NotFound("unknown username: " + username);
  UserAccount next = it->second;
  mutate(next);
  next.username = username;
  journal_or_throw(next);
  it->second = next;
  return next;
}

std::vector<UserAccount> AccountStore::all() const {
  std::vector<UserAccount> out;
  {
    std::shared_lock lock(mu_);
    out.reserve(accounts_.size());
    for (const auto& [_, a] : accounts_) out.push_back(a);
  }
  std::stable_sort(out.begin(), out.end(), [](const UserAccount& a, const UserAccount& b) {
    return a.created_at < b.created_at;
  });
  return out;
}

std::size_t AccountStore::size() const {
  std::shared_lock lock(mu_);
  return accounts_.size();
}

}  // namespace hearth::auth
