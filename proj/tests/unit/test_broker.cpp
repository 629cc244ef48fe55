#include <doctest.h>

#include <random>
#include <thread>

#include "hearth/broker/broker.hpp"
#include "hearth/common/error.hpp"
#include "topic_oracle.hpp"

using namespace hearth;
using namespace hearth::broker;

namespace {

bool matches(const std::string& f, const std::string& t) {
  return topic_matches(TopicFilter::parse(f), Topic::parse(t));
}

std::vector<Message> drain(const Subscription& s) {
  std::vector<Message> out;
  while (auto m = s.stream().try_pop()) out.push_back(std::move(m->value));
  return out;
}

}  // namespace

TEST_CASE("matching examples") {
  CHECK(matches("home/lounge/temperature", "home/lounge/temperature"));
  CHECK(matches("home/+/temperature", "home/lounge/temperature"));
  CHECK_FALSE(matches("home/+", "home/lounge/temperature"));
  CHECK(matches("home/#", "home"));
  CHECK(matches("home/#", "home/a/b/c"));
  CHECK(matches("#", "anything/at/all"));
  CHECK_FALSE(matches("home/+", "home"));
  CHECK_FALSE(matches("home/lounge", "home/Lounge"));
}

TEST_CASE("topic and filter validation") {
  CHECK_THROWS_AS(TopicFilter::parse("home/#/x"), MalformedInput);
  CHECK_THROWS_AS(TopicFilter::parse("home/a+"), MalformedInput);
  CHECK_THROWS_AS(TopicFilter::parse("home/x#"), MalformedInput);
  CHECK_THROWS_AS(TopicFilter::parse("home//x"), MalformedInput);
  CHECK_THROWS_AS(TopicFilter::parse(""), MalformedInput);
  CHECK_THROWS_AS(Topic::parse("home/+"), MalformedInput);
  CHECK_THROWS_AS(Topic::parse("home/#"), MalformedInput);
  CHECK_THROWS_AS(Topic::parse("home/"), MalformedInput);
  CHECK_THROWS_AS(Topic::parse(""), MalformedInput);
  CHECK(Topic::parse("a/b").levels() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("matcher agrees with both oracles over a small enumeration") {
  const auto topics = hearth::testing::enumerate({"a", "b"}, 3);
  const auto filters = hearth::testing::enumerate_filters({"a", "b"}, 3);
  std::size_t pairs = 0;
  for (const auto& f : filters)
    for (const auto& t : topics) {
      const bool want = hearth::testing::oracle_matches(f, t);
      CHECK(hearth::testing::regex_matches(f, t) == want);
      CHECK(matches(f, t) == want);
      ++pairs;
    }
  CHECK(pairs > 500);
}

TEST_CASE("publish counts deliveries and stores retained messages") {
  Broker b;
  CHECK(b.publish("home/lounge/temperature", "21", true) == 0);
  REQUIRE(b.retained(Topic::parse("home/lounge/temperature")));
  auto sub = b.subscribe("home/lounge/temperature");
  const auto replay = drain(sub);
  REQUIRE(replay.size() == 1);
  CHECK(replay[0].retained);
  CHECK(replay[0].payload == "21");
  CHECK(b.publish("home/lounge/temperature", "22") == 1);
  const auto live = drain(sub);
  REQUIRE(live.size() == 1);
  CHECK_FALSE(live[0].retained);
}

TEST_CASE("retained replay on wildcard subscribe, in publish order") {
  Broker b;
  b.publish("home/b", "1", true);
  b.publish("home/a", "2", true);
  b.publish("other", "3", true);
  b.publish("home/b", "4", true);  // replaces
  auto sub = b.subscribe("home/#");
  const auto got = drain(sub);
  REQUIRE(got.size() == 2);
  CHECK(got[0].topic.str() == "home/a");
  CHECK(got[1].topic.str() == "home/b");
  CHECK(got[1].payload == "4");
  CHECK(got[0].publish_seq < got[1].publish_seq);
  CHECK(b.retained_matching(TopicFilter::parse("#")).size() == 3);
}

TEST_CASE("empty retained payload clears the retained message") {
  Broker b;
  b.publish("x", "1", true);
  b.publish("x", "", true);
  CHECK_FALSE(b.retained(Topic::parse("x")));
}

TEST_CASE("subscriptions see only matching traffic") {
  Broker b;
  auto lights = b.subscribe("home/+/light");
  auto all = b.subscribe("#");
  b.publish("home/lounge/light", "on");
  b.publish("home/lounge/temperature", "20");
  CHECK(drain(lights).size() == 1);
  CHECK(drain(all).size() == 2);
  CHECK_THROWS_AS(b.subscribe("home/#/x"), MalformedInput);
}

TEST_CASE("unsubscribe stops delivery, is idempotent, and is isolated") {
  Broker b;
  auto s1 = b.subscribe("t");
  auto s2 = b.subscribe("t");
  b.publish("t", "1");
  CHECK(drain(s1).size() == 1);
  s1.unsubscribe();
  s1.unsubscribe();
  b.publish("t", "2");
  CHECK(drain(s1).empty());
  CHECK(drain(s2).size() == 2);
  {
    auto scoped = b.subscribe("t");
    CHECK(b.subscription_count() == 2);
  }
  CHECK(b.subscription_count() == 1);
  b.unsubscribe(12345);
}

TEST_CASE("publish_seq strictly increases per subscriber under concurrency") {
  Broker b;
  auto sub = b.subscribe("#");
  std::vector<std::thread> ts;
  for (int p = 0; p < 4; ++p)
    ts.emplace_back([&, p] {
      for (int i = 0; i < 500; ++i) b.publish("t/" + std::to_string(p), std::to_string(i), i % 7 == 0);
    });
  for (auto& t : ts) t.join();
  const auto got = drain(sub);
  CHECK(got.size() == 2000);
  for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].publish_seq < got[i].publish_seq);
  CHECK(b.last_seq() == 2000);
}

TEST_CASE("every delivery satisfies topic_matches") {
  Broker b;
  const std::vector<std::string> filters = {"a/+", "a/#", "+/b", "#", "a/b/c", "+/+/+"};
  std::vector<Subscription> subs;
  for (const auto& f : filters) subs.push_back(b.subscribe(f));
  std::mt19937_64 rng(3);
  const auto topics = hearth::testing::enumerate({"a", "b", "c"}, 3);
  for (int i = 0; i < 300; ++i) b.publish(topics[rng() % topics.size()], "p");
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (const auto& m : drain(subs[i])) CHECK(topic_matches(subs[i].filter(), m.topic));
}

TEST_CASE("bounded subscriptions drop with a gap marker") {
  Broker b;
  auto sub = b.subscribe("t", 1);
  b.publish("t", "1");
  b.publish("t", "2");
  CHECK(sub.stream().try_pop()->value.payload == "1");
  b.publish("t", "3");
  auto r = sub.stream().try_pop();
  REQUIRE(r);
  CHECK(r->gap);
  CHECK(r->value.payload == "3");
}
