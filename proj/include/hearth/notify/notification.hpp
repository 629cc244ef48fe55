#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hearth/common/encoding.hpp"
#include "hearth/common/time.hpp"

namespace hearth::notify {

enum class NotificationKind { approval_request, spoofing_attack, wrong_password, unrecognized_face };

std::string_view to_string(NotificationKind kind);
/// Throws InvalidArgument for unknown names.
NotificationKind parse_notification_kind(std::string_view name);

/// Admin-directed security event with the picture captured at the time.
struct Notification {
  std::uint64_t id = 0;
  NotificationKind kind = NotificationKind::approval_request;
  std::optional<std::string> username;  // absent for pre-account spoofing attempts
  Bytes image;
  Timestamp created_at{};
  bool acknowledged = false;
  /// False when the write-ahead record could not be stored; never persisted itself.
  bool persisted = true;

  bool operator==(const Notification&) const = default;
};

}  // namespace hearth::notify
