#include "hearth/notify/notification_log.hpp"

#include <algorithm>
#include <string>

#include "hearth/common/error.hpp"

namespace hearth::notify {

NotificationLog::NotificationLog(ClockFn clock, std::size_t stream_capacity)
    : clock_(std::move(clock)), stream_capacity_(stream_capacity) {}

void NotificationLog::set_journal(Journal journal) {
  std::lock_guard lock(mu_);
  journal_ = std::move(journal);
}

void NotificationLog::restore(std::vector<Notification> records) {
  std::sort(records.begin(), records.end(),
            [](const Notification& a, const Notification& b) { return a.id < b.id; });
  std::lock_guard lock(mu_);
  records_ = std::move(records);
  next_id_ = records_.empty() ? 1 : records_.back().id + 1;
}

Notification NotificationLog::emit(NotificationKind kind, std::optional<std::string> username,
                                   Bytes image) {
  if (kind == NotificationKind::approval_request && !username)
    throw InvalidArgument("approval_request requires a username");

  std::lock_guard lock(mu_);
  Notification n;
  n.id = next_id_;
  n.kind = kind;
  n.username = std::move(username);
  n.image = std::move(image);
  n.created_at = clock_();
  if (journal_) {
    try {
      journal_(n);
    } catch (const std::exception&) {
      n.persisted = false;
    }
  }
  ++next_id_;
  records_.push_back(n);

  std::erase_if(streams_, [](const NotificationStream& s) { return s->closed(); });
  for (const auto& s : streams_) s->push(n);
  return n;
}

std::vector<Notification> NotificationLog::list(std::optional<NotificationKind> kind,
                                                std::optional<std::uint64_t> since_id) const {
  std::lock_guard lock(mu_);
  std::vector<Notification> out;
  for (const auto& n : records_) {
    if (kind && n.kind != *kind) continue;
    if (since_id && n.id <= *since_id) continue;
    out.push_back(n);
  }
  return out;
}

Notification NotificationLog::acknowledge(std::uint64_t id) {
  std::lock_guard lock(mu_);
  auto it = std::lower_bound(records_.begin(), records_.end(), id,
                             [](const Notification& n, std::uint64_t v) { return n.id < v; });
  if (it == records_.end() || it->id != id)
    throw NotFound("unknown notification id " + std::to_string(id));
  if (it->acknowledged) return *it;

  Notification updated = *it;
  updated.acknowledged = true;
  if (journal_) {
    try {
      journal_(updated);
    } catch (const std::exception& e) {
      throw InternalError(std::string("failed to persist acknowledgement: ") + e.what());
    }
  }
  updated.persisted = true;
  *it = updated;
  return updated;
}

NotificationStream NotificationLog::subscribe() {
  auto stream = std::make_shared<Channel<Notification>>(stream_capacity_);
  std::lock_guard lock(mu_);
  streams_.push_back(stream);
  return stream;
}

void NotificationLog::unsubscribe(const NotificationStream& stream) {
  if (!stream) return;
  stream->close();
  std::lock_guard lock(mu_);
  std::erase(streams_, stream);
}

std::size_t NotificationLog::size() const {
  std::lock_guard lock(mu_);
  return records_.size();
}

std::uint64_t NotificationLog::last_id() const {
  std::lock_guard lock(mu_);
  return next_id_ - 1;
}

}  // namespace hearth::notify
