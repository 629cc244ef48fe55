#include <doctest.h>

#include <thread>

#include "fixtures.hpp"
#include "hearth/common/error.hpp"
#include "hearth/notify/notification_log.hpp"

using namespace hearth;
using namespace hearth::notify;

TEST_CASE("emit assigns increasing ids starting at 1") {
  testing::FakeClock clock;
  NotificationLog log(clock.fn());
  const auto a = log.emit(NotificationKind::approval_request, "alice", Bytes{1, 2});
  CHECK(a.id == 1);
  CHECK(a.kind == NotificationKind::approval_request);
  CHECK(a.username == std::optional<std::string>("alice"));
  CHECK(a.image == Bytes{1, 2});
  CHECK(a.created_at == clock.now());
  CHECK_FALSE(a.acknowledged);
  CHECK(log.emit(NotificationKind::wrong_password, "alice", {}).id == 2);
  CHECK(log.last_id() == 2);
}

TEST_CASE("spoofing notices may lack a username; approval requests may not") {
  NotificationLog log;
  CHECK_FALSE(log.emit(NotificationKind::spoofing_attack, std::nullopt, {}).username);
  CHECK_THROWS_AS(log.emit(NotificationKind::approval_request, std::nullopt, {}), InvalidArgument);
  CHECK(log.size() == 1);
}

TEST_CASE("list filters by kind and since_id") {
  NotificationLog log;
  CHECK(log.list().empty());
  log.emit(NotificationKind::wrong_password, "a", {});
  CHECK(log.list(NotificationKind::spoofing_attack).empty());
  log.emit(NotificationKind::spoofing_attack, std::nullopt, {});
  log.emit(NotificationKind::unrecognized_face, "b", {});
  const auto after1 = log.list(std::nullopt, 1);
  REQUIRE(after1.size() == 2);
  CHECK(after1[0].id == 2);
  CHECK(after1[1].id == 3);
  CHECK(log.list(NotificationKind::spoofing_attack).size() == 1);
  CHECK(log.list(NotificationKind::spoofing_attack, 2).empty());
}

TEST_CASE("acknowledge is idempotent and isolated") {
  NotificationLog log;
  CHECK_THROWS_AS(log.acknowledge(99), NotFound);
  log.emit(NotificationKind::wrong_password, "a", {});
  log.emit(NotificationKind::wrong_password, "b", {});
  CHECK(log.acknowledge(2).acknowledged);
  CHECK(log.acknowledge(2).acknowledged);
  CHECK_FALSE(log.list()[0].acknowledged);
}

TEST_CASE("streams receive events in id order") {
  NotificationLog log;
  auto s = log.subscribe();
  std::vector<std::thread> ts;
  for (int t = 0; t < 4; ++t)
    ts.emplace_back([&] {
      for (int i = 0; i < 50; ++i) log.emit(NotificationKind::wrong_password, "x", {});
    });
  for (auto& t : ts) t.join();
  std::uint64_t last = 0;
  int n = 0;
  while (auto r = s->try_pop()) {
    CHECK(r->value.id == last + 1);
    last = r->value.id;
    ++n;
  }
  CHECK(n == 200);
  log.unsubscribe(s);
  log.emit(NotificationKind::wrong_password, "x", {});
  CHECK_FALSE(s->try_pop());
}

TEST_CASE("slow stream consumers get a gap marker instead of blocking") {
  NotificationLog log(now_utc, 2);
  auto s = log.subscribe();
  for (int i = 0; i < 5; ++i) log.emit(NotificationKind::wrong_password, "x", {});
  CHECK(log.size() == 5);
  CHECK(s->try_pop()->value.id == 1);
  CHECK(s->try_pop()->value.id == 2);
  log.emit(NotificationKind::wrong_password, "x", {});
  auto r = s->try_pop();
  REQUIRE(r);
  CHECK(r->gap);
  CHECK(r->value.id == 6);
}

TEST_CASE("journal failure: event kept and streamed, flagged unpersisted") {
  NotificationLog log;
  std::vector<Notification> journaled;
  log.set_journal([&](const Notification& n) { journaled.push_back(n); });
  log.emit(NotificationKind::wrong_password, "a", {});
  CHECK(journaled.size() == 1);

  auto s = log.subscribe();
  log.set_journal([](const Notification&) { throw std::runtime_error("disk"); });
  const auto n = log.emit(NotificationKind::spoofing_attack, std::nullopt, {});
  CHECK_FALSE(n.persisted);
  CHECK(s->try_pop()->value.id == n.id);
  CHECK_FALSE(log.list().back().persisted);
  CHECK_THROWS_AS(log.acknowledge(1), InternalError);
  CHECK_FALSE(log.list().front().acknowledged);
}

TEST_CASE("restore continues the id sequence") {
  NotificationLog log;
  Notification a;
  a.id = 7;
  a.kind = NotificationKind::unrecognized_face;
  a.username = "z";
  log.restore({a});
  CHECK(log.emit(NotificationKind::wrong_password, "z", {}).id == 8);
}

TEST_CASE("kind names round trip") {
  for (auto k : {NotificationKind::approval_request, NotificationKind::spoofing_attack,
                 NotificationKind::wrong_password, NotificationKind::unrecognized_face})
    CHECK(parse_notification_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_notification_kind("fire"), InvalidArgument);
}
