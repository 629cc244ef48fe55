#pragma once

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <limits>
#include <mutex>
#include <optional>

namespace hearth {

/// One item popped from a Channel. `gap` is set when the producer overran the
/// buffer and events were dropped before `value`; the consumer should resync
/// from the source of record.
template <typename T>
struct Received {
  T value;
  bool gap = false;
};

/// Multi-producer single-consumer queue. When the buffer is full, incoming
/// items are discarded and the next delivered item carries a gap marker.
template <typename T>
class Channel {
 public:
  explicit Channel(std::size_t capacity = std::numeric_limits<std::size_t>::max())
      : capacity_(capacity) {}

  /// Returns false if the item was dropped (closed or full).
  bool push(T item) {
    {
      std::lock_guard lock(mu_);
      if (closed_) return false;
      if (items_.size() >= capacity_) {
        ++dropped_;
        pending_gap_ = true;
        return false;
      }
      items_.push_back(Entry{std::move(item), pending_gap_});
      pending_gap_ = false;
    }
    cv_.notify_one();
    return true;
  }

  /// Blocks up to `timeout`. Empty result on timeout or when closed and drained.
  template <typename Rep, typename Period>
  std::optional<Received<T>> pop(std::chrono::duration<Rep, Period> timeout) {
    std::unique_lock lock(mu_);
    if (!cv_.wait_for(lock, timeout, [&] { return !items_.empty() || closed_; })) return std::nullopt;
    return take_locked();
  }

  std::optional<Received<T>> try_pop() {
    std::lock_guard lock(mu_);
    return take_locked();
  }

  void close() {
    {
      std::lock_guard lock(mu_);
      closed_ = true;
    }
    cv_.notify_all();
  }

  bool closed() const {
    std::lock_guard lock(mu_);
    return closed_;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return items_.size();
  }

  std::size_t dropped() const {
    std::lock_guard lock(mu_);
    return dropped_;
  }

 private:
  struct Entry {
    T value;
    bool gap;
  };

  std::optional<Received<T>> take_locked() {
    if (items_.empty()) return std::nullopt;
    Entry e = std::move(items_.front());
    items_.pop_front();
    return Received<T>{std::move(e.value), e.gap};
  }

  const std::size_t capacity_;
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Entry> items_;
  bool closed_ = false;
  bool pending_gap_ = false;
  std::size_t dropped_ = 0;
};

}  // namespace hearth
