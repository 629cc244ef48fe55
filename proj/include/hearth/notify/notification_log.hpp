#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hearth/common/channel.hpp"
#include "hearth/notify/notification.hpp"

namespace hearth::notify {

using NotificationStream = std::shared_ptr<Channel<Notification>>;

/// Append-only log of admin notifications with live fan-out.
///
/// Ids are assigned under the log mutex, and journaling plus fan-out happen
/// under the same lock, so every subscriber sees events in id order.
class NotificationLog {
 public:
  /// Write-ahead hook, called with each new or updated record before it
  /// becomes visible. Throwing signals a persistence failure.
  using Journal = std::function<void(const Notification&)>;

  explicit NotificationLog(ClockFn clock = now_utc, std::size_t stream_capacity = 256);

  void set_journal(Journal journal);

  /// Replaces the contents with previously persisted records (replay on load).
  void restore(std::vector<Notification> records);

  /// A journal failure does not throw: the event is still delivered to live
  /// streams and kept in memory with persisted=false.
  Notification emit(NotificationKind kind, std::optional<std::string> username, Bytes image);

  std::vector<Notification> list(std::optional<NotificationKind> kind = std::nullopt,
                                 std::optional<std::uint64_t> since_id = std::nullopt) const;

  /// Idempotent. Throws NotFound for unknown ids, InternalError if the
  /// journal rejects the update (the in-memory record is left unchanged).
  Notification acknowledge(std::uint64_t id);

  NotificationStream subscribe();
  void unsubscribe(const NotificationStream& stream);

  std::size_t size() const;
  std::uint64_t last_id() const;

 private:
  ClockFn clock_;
  std::size_t stream_capacity_;
  mutable std::mutex mu_;
  Journal journal_;
  std::vector<Notification> records_;  // ascending by id
  std::uint64_t next_id_ = 1;
  std::vector<NotificationStream> streams_;
};

}  // namespace hearth::notify
