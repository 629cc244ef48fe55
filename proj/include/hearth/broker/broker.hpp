#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hearth/broker/topic.hpp"
#include "hearth/common/channel.hpp"

namespace hearth::broker {

struct Message {
  Topic topic;
  std::string payload;  // opaque bytes
  bool retained = false;
  std::uint64_t publish_seq = 0;
};

using SubscriptionId = std::uint64_t;
using MessageStream = std::shared_ptr<Channel<Message>>;

class Broker;

/// Move-only subscription handle; unsubscribes when destroyed.
class Subscription {
 public:
  Subscription() = default;
  Subscription(Broker* broker, SubscriptionId id, TopicFilter filter, MessageStream stream)
      : broker_(broker), id_(id), filter_(std::move(filter)), stream_(std::move(stream)) {}
  Subscription(Subscription&& o) noexcept;
  Subscription& operator=(Subscription&& o) noexcept;
  Subscription(const Subscription&) = delete;
  Subscription& operator=(const Subscription&) = delete;
  ~Subscription();

  SubscriptionId id() const { return id_; }
  const TopicFilter& filter() const { return *filter_; }
  Channel<Message>& stream() const { return *stream_; }
  const MessageStream& shared_stream() const { return stream_; }

  /// Idempotent.
  void unsubscribe();

 private:
  Broker* broker_ = nullptr;
  SubscriptionId id_ = 0;
  std::optional<TopicFilter> filter_;
  MessageStream stream_;
};

/// In-process publish/subscribe hub with MQTT topic semantics and retained
/// messages. Delivery is at-most-once into per-subscription queues.
///
/// publish_seq is assigned and messages are enqueued under one lock, so each
/// subscriber observes strictly increasing sequence numbers: retained
/// replays first, then live traffic.
class Broker {
 public:
  Broker() = default;
  Broker(const Broker&) = delete;
  Broker& operator=(const Broker&) = delete;

  /// Returns the number of subscriptions the message was delivered to. A
  /// retained publish replaces the topic's retained message; a retained
  /// publish with an empty payload clears it.
  std::size_t publish(const Topic& topic, std::string payload, bool retained = false);
  /// Parses `topic` first; throws MalformedInput for filters or bad names.
  std::size_t publish(std::string_view topic, std::string payload, bool retained = false);

  Subscription subscribe(const TopicFilter& filter,
                         std::size_t capacity = std::numeric_limits<std::size_t>::max());
  Subscription subscribe(std::string_view filter,
                         std::size_t capacity = std::numeric_limits<std::size_t>::max());

  /// Idempotent; unknown ids are ignored.
  void unsubscribe(SubscriptionId id);

  std::optional<Message> retained(const Topic& topic) const;
  std::vector<Message> retained_matching(const TopicFilter& filter) const;

  std::uint64_t last_seq() const;
  std::size_t subscription_count() const;

 private:
  struct Entry {
    TopicFilter filter;
    MessageStream stream;
  };

  mutable std::mutex mu_;
  std::uint64_t seq_ = 0;
  SubscriptionId next_id_ = 1;
  std::map<SubscriptionId, Entry> subs_;
  std::map<std::string, Message> retained_;
};

}  // namespace hearth::broker
