#include <doctest.h>

#include "fixtures.hpp"
#include "hearth/admin/admin_manager.hpp"
#include "hearth/auth/login_manager.hpp"
#include "hearth/common/error.hpp"

using namespace hearth;
using namespace hearth::auth;
using hearth::admin::AdminManager;
using hearth::admin::ApprovalDecision;
using hearth::admin::ApprovalState;

namespace {

struct Rig {
  testing::FakeClock clock;
  AccountStore store;
  notify::NotificationLog log{clock.fn()};
  LoginManager login{store, log, AuthConfig{AuthMode::mfa, {}, 8, 0.8}, {}, nullptr, nullptr, clock.fn()};
  AdminManager admin{store};
  std::mt19937_64 rng{77};
  std::map<std::string, Embedding> faces;

  void enroll(const std::string& name) {
    faces[name] = testing::random_unit(rng, 8);
    REQUIRE(login.register_user(name, "pw", testing::jittered(faces[name], 3, rng)).ok());
    clock.advance(std::chrono::seconds(1));
  }
};

}  // namespace

TEST_CASE("list_pending: oldest first, credentials stripped") {
  Rig r;
  CHECK(r.admin.list_pending().empty());
  r.enroll("zed");
  r.enroll("alice");
  const auto pending = r.admin.list_pending();
  REQUIRE(pending.size() == 2);
  CHECK(pending[0].username == "zed");
  CHECK(pending[1].username == "alice");
  CHECK(pending[0].status == AccountStatus::pending);
  CHECK(pending[0].permission == Permission::none);
}

TEST_CASE("approval read-your-write and pending list shrinks") {
  Rig r;
  r.enroll("alice");
  CHECK(r.admin.get_user_approval("alice") == ApprovalState{AccountStatus::pending, Permission::none});
  const auto s = r.admin.set_user_approval({"alice", AccountStatus::active, Permission::read});
  CHECK(s.status == AccountStatus::active);
  CHECK(r.admin.get_user_approval("alice") == ApprovalState{AccountStatus::active, Permission::read});
  CHECK(r.admin.list_pending().empty());
}

TEST_CASE("invalid decisions are rejected and leave the account alone") {
  Rig r;
  r.enroll("alice");
  CHECK_THROWS_AS(r.admin.set_user_approval({"alice", AccountStatus::active, Permission::none}), InvalidArgument);
  CHECK_THROWS_AS(r.admin.set_user_approval({"alice", AccountStatus::pending, Permission::read}), InvalidArgument);
  CHECK_THROWS_AS(r.admin.set_user_approval({"nobody", AccountStatus::active, Permission::read}), NotFound);
  CHECK_THROWS_AS(r.admin.get_user_approval("nobody"), NotFound);
  CHECK(r.admin.get_user_approval("alice") == ApprovalState{AccountStatus::pending, Permission::none});
}

TEST_CASE("approved user logs in; disabled user is refused") {
  Rig r;
  r.enroll("alice");
  r.admin.set_user_approval({"alice", AccountStatus::active, Permission::read_write});
  CHECK(r.login.login("alice", "pw", testing::jittered(r.faces["alice"], 3, r.rng)).ok());
  r.admin.set_user_approval({"alice", AccountStatus::disabled, Permission::none});
  CHECK(r.login.login("alice", "pw", testing::jittered(r.faces["alice"], 3, r.rng)).kind ==
        AuthOutcomeKind::account_not_active);
}

TEST_CASE("decided users never reappear in the pending list") {
  Rig r;
  for (const char* n : {"a", "b", "c", "d"}) r.enroll(n);
  r.admin.set_user_approval({"b", AccountStatus::active, Permission::write});
  r.admin.set_user_approval({"d", AccountStatus::disabled, Permission::none});
  std::vector<std::string> names;
  for (const auto& s : r.admin.list_pending()) names.push_back(s.username);
  CHECK(names == std::vector<std::string>{"a", "c"});
}

TEST_CASE("the later of two decisions wins") {
  Rig r;
  r.enroll("alice");
  r.admin.set_user_approval({"alice", AccountStatus::active, Permission::read});
  r.admin.set_user_approval({"alice", AccountStatus::active, Permission::write});
  CHECK(r.admin.get_user_approval("alice").permission == Permission::write);
}
