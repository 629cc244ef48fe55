#include "hearth/broker/broker.hpp"

#include <algorithm>
#include <utility>

namespace hearth::broker {

Subscription::Subscription(Subscription&& o) noexcept
    : broker_(std::exchange(o.broker_, nullptr)),
      id_(std::exchange(o.id_, 0)),
      filter_(std::move(o.filter_)),
      stream_(std::move(o.stream_)) {}

Subscription& Subscription::operator=(Subscription&& o) noexcept {
  if (this != &o) {
    unsubscribe();
    broker_ = std::exchange(o.broker_, nullptr);
    id_ = std::exchange(o.id_, 0);
    filter_ = std::move(o.filter_);
    stream_ = std::move(o.stream_);
  }
  return *this;
}

Subscription::~Subscription() { unsubscribe(); }

void Subscription::unsubscribe() {
  if (broker_ != nullptr) {
    broker_->unsubscribe(id_);
    broker_ = nullptr;
  }
}

std::size_t Broker::publish(const Topic& topic, std::string payload, bool retained) {
  std::lock_guard lock(mu_);
  Message msg{topic, std::move(payload), retained, ++seq_};
  if (retained) {
    if (msg.payload.empty())
      retained_.erase(topic.str());
    else
      retained_.insert_or_assign(topic.str(), msg);
  }
  std::size_t delivered = 0;
  for (auto& [_, entry] : subs_) {
    if (topic_matches(entry.filter, topic) && entry.stream->push(msg)) ++delivered;
  }
  return delivered;
}

std::size_t Broker::publish(std::string_view topic, std::string payload, bool retained) {
  return publish(Topic::parse(topic), std::move(payload), retained);
}

Subscription Broker::subscribe(const TopicFilter& filter, std::size_t capacity) {
  auto stream = std::make_shared<Channel<Message>>(capacity);
  std::lock_guard lock(mu_);
  std::vector<const Message*> replay;
  for (const auto& [_, msg] : retained_)
    if (topic_matches(filter, msg.topic)) replay.push_back(&msg);
  std::sort(replay.begin(), replay.end(),
            [](const Message* a, const Message* b) { return a->publish_seq < b->publish_seq; });
  for (const auto* msg : replay) stream->push(*msg);

  const SubscriptionId id = next_id_++;
  subs_.emplace(id, Entry{filter, stream});
  return Subscription(this, id, filter, std::move(stream));
}

Subscription Broker::subscribe(std::string_view filter, std::size_t capacity) {
  return subscribe(TopicFilter::parse(filter), capacity);
}

void Broker::unsubscribe(SubscriptionId id) {
  MessageStream stream;
  {
    std::lock_guard lock(mu_);
    auto it = subs_.find(id);
    if (it == subs_.end()) return;
    stream = std::move(it->second.stream);
    subs_.erase(it);
  }
  stream->close();
}

std::optional<Message> Broker::retained(const Topic& topic) const {
  std::lock_guard lock(mu_);
  auto it = retained_.find(topic.str());
  if (it == retained_.end()) return std::nullopt;
  return it->second;
}

std::vector<Message> Broker::retained_matching(const TopicFilter& filter) const {
  std::lock_guard lock(mu_);
  std::vector<Message> out;
  for (const auto& [_, msg] : retained_)
    if (topic_matches(filter, msg.topic)) out.push_back(msg);
  std::sort(out.begin(), out.end(),
            [](const Message& a, const Message& b) { return a.publish_seq < b.publish_seq; });
  return out;
}

std::uint64_t Broker::last_seq() const {
  std::lock_guard lock(mu_);
  return seq_;
}

std::size_t Broker::subscription_count() const {
  std::lock_guard lock(mu_);
  return subs_.size();
}

}  // namespace hearth::broker
