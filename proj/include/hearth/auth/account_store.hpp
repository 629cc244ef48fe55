#pragma once

#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hearth/auth/types.hpp"

namespace hearth::auth {

/// In-memory account table keyed by username, with a write-ahead hook.
///
/// Every mutation first hands the new version of the record to the journal;
/// only if that succeeds is the in-memory table changed. A failing journal
/// therefore leaves the store untouched and surfaces as InternalError.
class AccountStore {
 public:
  using Journal = std::function<void(const UserAccount&)>;

  void set_journal(Journal journal);
  void restore(std::vector<UserAccount> accounts);

  bool exists(const std::string& username) const;
  std::optional<UserAccount> find(const std::string& username) const;

  /// False if the username is already taken.
  bool insert(UserAccount account);

  /// Applies `mutate` to a copy of the record and commits it. Throws NotFound.
  UserAccount update(const std::string& username, const std::function<void(UserAccount&)>& mutate);

  /// All accounts ascending by (created_at, username).
  std::vector<UserAccount> all() const;
  std::size_t size() const;

 private:
  void journal_or_throw(const UserAccount& a) const;

  mutable std::shared_mutex mu_;
  Journal journal_;
  std::map<std::string, UserAccount> accounts_;
};

}  // namespace hearth::auth
