#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hearth/auth/hashing.hpp"
#include "hearth/auth/login_manager.hpp"
#include "hearth/common/error.hpp"

using namespace hearth;
using namespace hearth::auth;
using notify::NotificationKind;

namespace {

constexpr std::size_t kDim = 16;

struct Rig {
  testing::FakeClock clock;
  AccountStore store;
  notify::NotificationLog log{clock.fn()};
  int tokens = 0;
  LoginManager mgr;
  std::mt19937_64 rng{1234};
  Embedding alice_face = testing::random_unit(rng, kDim);

  explicit Rig(AuthMode mode = AuthMode::mfa)
      : mgr(store, log, AuthConfig{mode, {}, kDim, 0.8},
            [this](const std::string& u, bool) { return u + "-token-" + std::to_string(++tokens); }, nullptr,
            nullptr, clock.fn()) {
    mgr.set_admin("admin", "root-pw");
  }

  FaceFrames live(const Embedding& face) { return testing::jittered(face, 3, rng); }

  void add_alice(AccountStatus status = AccountStatus::active, Permission p = Permission::read_write) {
    REQUIRE(mgr.register_user("alice", "pw", live(alice_face)).ok());
    store.update("alice", [&](UserAccount& a) {
      a.status = status;
      a.permission = status == AccountStatus::pending ? Permission::none : p;
    });
  }

  std::vector<NotificationKind> kinds() const {
    std::vector<NotificationKind> out;
    for (const auto& n : log.list()) out.push_back(n.kind);
    return out;
  }
};

}  // namespace

TEST_CASE("register: check order follows the registration flow") {
  Rig r;
  const auto live = r.live(r.alice_face);
  CHECK(r.mgr.register_user("", "pw", live).kind == AuthOutcomeKind::empty_username);
  CHECK(r.mgr.register_user("", "", testing::replayed(r.alice_face, 3)).kind == AuthOutcomeKind::empty_username);
  CHECK(r.mgr.register_user("admin", "pw", live).kind == AuthOutcomeKind::username_exists);
  CHECK(r.mgr.register_user("bob", "", testing::replayed(r.alice_face, 3)).kind == AuthOutcomeKind::empty_password);
  CHECK(r.log.size() == 0);
  CHECK(r.store.size() == 0);

  const auto ok = r.mgr.register_user("alice", "pw", live);
  CHECK(ok.kind == AuthOutcomeKind::ok);
  CHECK_FALSE(ok.session_token);
  const auto alice = r.store.find("alice");
  REQUIRE(alice);
  CHECK(alice->status == AccountStatus::pending);
  CHECK(alice->permission == Permission::none);
  CHECK(alice->salt.size() == kSaltSize);
  CHECK(alice->password_digest == hash_password("pw", alice->salt));
  CHECK(alice->created_at == r.clock.now());
  REQUIRE(r.log.size() == 1);
  const auto n = r.log.list().front();
  CHECK(n.kind == NotificationKind::approval_request);
  CHECK(n.username == std::optional<std::string>("alice"));
  CHECK(n.image == live.capture_image);

  CHECK(r.mgr.register_user("alice", "other", live).kind == AuthOutcomeKind::username_exists);
  CHECK(r.log.size() == 1);
}

TEST_CASE("register: a replayed capture is a spoofing attack with no username") {
  Rig r;
  const auto spoof = testing::replayed(r.alice_face, 3);
  CHECK(r.mgr.register_user("alice", "pw", spoof).kind == AuthOutcomeKind::spoofing_detected);
  CHECK(r.store.size() == 0);
  REQUIRE(r.log.size() == 1);
  const auto n = r.log.list().front();
  CHECK(n.kind == NotificationKind::spoofing_attack);
  CHECK_FALSE(n.username);
  CHECK(n.image == spoof.capture_image);

  // Too few frames are also a liveness failure.
  CHECK(r.mgr.register_user("alice", "pw", testing::jittered(r.alice_face, 2, r.rng)).kind ==
        AuthOutcomeKind::spoofing_detected);
}

TEST_CASE("register: malformed frames are input errors and leave no trace") {
  Rig r;
  CHECK_THROWS_AS(r.mgr.register_user("alice", "pw", FaceFrames{}), MalformedInput);
  auto wrong_dim = testing::jittered(testing::random_unit(r.rng, kDim + 1), 3, r.rng);
  CHECK_THROWS_AS(r.mgr.register_user("alice", "pw", wrong_dim), MalformedInput);
  CHECK(r.store.size() == 0);
  CHECK(r.log.size() == 0);
}

TEST_CASE("login mfa: each failure in order with its notice") {
  Rig r;
  r.add_alice();
  const auto before = r.log.size();
  const auto live = r.live(r.alice_face);

  CHECK(r.mgr.login("", "pw", live).kind == AuthOutcomeKind::empty_username);
  CHECK(r.mgr.login("carol", "pw", live).kind == AuthOutcomeKind::username_unknown);
  CHECK(r.mgr.login("alice", std::nullopt, live).kind == AuthOutcomeKind::empty_password);
  CHECK(r.mgr.login("alice", "", live).kind == AuthOutcomeKind::empty_password);
  CHECK(r.log.size() == before);

  auto out = r.mgr.login("alice", "wrong", live);
  CHECK(out.kind == AuthOutcomeKind::wrong_password);
  CHECK_FALSE(out.session_token);
  CHECK(r.log.list().back().kind == NotificationKind::wrong_password);
  CHECK(r.log.list().back().username == std::optional<std::string>("alice"));
  CHECK(r.log.list().back().image == live.capture_image);

  CHECK(r.mgr.login("alice", "pw", testing::replayed(r.alice_face, 3)).kind == AuthOutcomeKind::spoofing_detected);
  CHECK(r.log.list().back().kind == NotificationKind::spoofing_attack);
  CHECK(r.log.list().back().username == std::optional<std::string>("alice"));

  const auto stranger = testing::orthogonal_unit(r.alice_face, r.rng);
  CHECK(r.mgr.login("alice", "pw", r.live(stranger)).kind == AuthOutcomeKind::unrecognized_face);
  CHECK(r.log.list().back().kind == NotificationKind::unrecognized_face);
  CHECK(r.log.size() == before + 3);

  out = r.mgr.login("alice", "pw", live);
  CHECK(out.kind == AuthOutcomeKind::ok);
  CHECK(out.session_token == std::optional<std::string>("alice-token-1"));
  CHECK_FALSE(out.is_admin);
  CHECK(r.log.size() == before + 3);  // success is silent
}

TEST_CASE("login: activation gate comes after the biometric checks") {
  Rig r;
  r.add_alice(AccountStatus::pending);
  CHECK(r.mgr.login("alice", "pw", r.live(r.alice_face)).kind == AuthOutcomeKind::account_not_active);
  const auto before = r.log.size();
  const auto stranger = testing::orthogonal_unit(r.alice_face, r.rng);
  CHECK(r.mgr.login("alice", "pw", r.live(stranger)).kind == AuthOutcomeKind::unrecognized_face);
  CHECK(r.log.size() == before + 1);

  r.store.update("alice", [](UserAccount& a) { a.status = AccountStatus::disabled; });
  CHECK(r.mgr.login("alice", "pw", r.live(r.alice_face)).kind == AuthOutcomeKind::account_not_active);
}

TEST_CASE("login password_only skips liveness and face") {
  Rig r(AuthMode::password_only);
  r.add_alice();
  CHECK(r.mgr.login("alice", "pw", testing::replayed(r.alice_face, 1)).ok());
  CHECK(r.mgr.login("alice", "pw", FaceFrames{}).ok());
  CHECK(r.mgr.login("alice", "nope", FaceFrames{}).kind == AuthOutcomeKind::wrong_password);
}

TEST_CASE("login face_only skips the password and offers the fallback") {
  Rig r(AuthMode::face_only);
  r.add_alice();
  const auto before = r.log.size();
  CHECK(r.mgr.login("alice", std::nullopt, r.live(r.alice_face)).ok());
  CHECK(r.mgr.login("alice", "wrong-is-ignored", r.live(r.alice_face)).ok());
  const auto stranger = testing::orthogonal_unit(r.alice_face, r.rng);
  CHECK(r.mgr.login("alice", std::nullopt, r.live(stranger)).kind == AuthOutcomeKind::password_fallback_available);
  CHECK(r.log.list().back().kind == NotificationKind::unrecognized_face);
  CHECK(r.log.size() == before + 1);

  // The fallback is a password_only attempt.
  CHECK(r.mgr.login("alice", "pw", FaceFrames{}, AuthMode::password_only).ok());
}

TEST_CASE("admin logs in with the password alone") {
  Rig r;
  auto out = r.mgr.login("admin", "root-pw", FaceFrames{});
  CHECK(out.ok());
  CHECK(out.is_admin);
  CHECK(out.session_token);
  CHECK(r.mgr.login("admin", std::nullopt, FaceFrames{}).kind == AuthOutcomeKind::empty_password);
  CHECK(r.mgr.login("admin", "bad", FaceFrames{}).kind == AuthOutcomeKind::wrong_password);
  CHECK(r.log.list().back().kind == NotificationKind::wrong_password);
  CHECK(r.mgr.is_admin_name("admin"));
  CHECK_FALSE(r.mgr.is_admin_name("alice"));
}

TEST_CASE("store is unchanged by every non-ok call") {
  Rig r;
  r.add_alice();
  const auto snapshot = r.store.all();
  const auto stranger = testing::orthogonal_unit(r.alice_face, r.rng);
  r.mgr.register_user("", "pw", r.live(r.alice_face));
  r.mgr.register_user("alice", "pw", r.live(r.alice_face));
  r.mgr.register_user("bob", "", r.live(r.alice_face));
  r.mgr.register_user("bob", "pw", testing::replayed(r.alice_face, 3));
  r.mgr.login("alice", "bad", r.live(r.alice_face));
  r.mgr.login("alice", "pw", testing::replayed(r.alice_face, 3));
  r.mgr.login("alice", "pw", r.live(stranger));
  CHECK(r.store.all() == snapshot);
}

TEST_CASE("a failing journal surfaces as InternalError with no partial account") {
  Rig r;
  r.store.set_journal([](const UserAccount&) { throw std::runtime_error("disk full"); });
  CHECK_THROWS_AS(r.mgr.register_user("alice", "pw", r.live(r.alice_face)), InternalError);
  CHECK(r.store.size() == 0);
  CHECK(r.log.size() == 0);
}

TEST_CASE("config validation") {
  AccountStore store;
  notify::NotificationLog log;
  CHECK_THROWS_AS(LoginManager(store, log, AuthConfig{AuthMode::mfa, {}, 0, 0.8}), InvalidArgument);
  CHECK_THROWS_AS(LoginManager(store, log, AuthConfig{AuthMode::mfa, {}, 8, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(LoginManager(store, log, AuthConfig{AuthMode::mfa, {3, 0.0}, 8, 0.8}), InvalidArgument);
  LoginManager ok(store, log, AuthConfig{});
  CHECK_THROWS_AS(ok.set_admin("", "x"), InvalidArgument);
}

TEST_CASE("enum names round trip") {
  for (auto s : {AccountStatus::pending, AccountStatus::active, AccountStatus::disabled})
    CHECK(parse_status(to_string(s)) == s);
  for (auto p : {Permission::none, Permission::read, Permission::write, Permission::read_write})
    CHECK(parse_permission(to_string(p)) == p);
  for (auto m : {AuthMode::mfa, AuthMode::face_only, AuthMode::password_only}) CHECK(parse_mode(to_string(m)) == m);
  CHECK_THROWS_AS(parse_mode("sms"), InvalidArgument);
}

TEST_CASE("write does not imply read") {
  CHECK(allows_read(Permission::read));
  CHECK(allows_read(Permission::read_write));
  CHECK_FALSE(allows_read(Permission::write));
  CHECK_FALSE(allows_read(Permission::none));
  CHECK(allows_write(Permission::write));
  CHECK(allows_write(Permission::read_write));
  CHECK_FALSE(allows_write(Permission::read));
  CHECK(permits(Permission::none, AccessClass::none));
  CHECK_FALSE(permits(Permission::write, AccessClass::read));
}
