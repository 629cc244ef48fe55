#include "hearth/notify/notification.hpp"

#include <string>

#include "hearth/common/error.hpp"

namespace hearth::notify {

std::string_view to_string(NotificationKind kind) {
  switch (kind) {
    case NotificationKind::approval_request:
      return "approval_request";
    case NotificationKind::spoofing_attack:
      return "spoofing_attack";
    case NotificationKind::wrong_password:
      return "wrong_password";
    case NotificationKind::unrecognized_face:
      return "unrecognized_face";
  }
  return "unknown";
}

NotificationKind parse_notification_kind(std::string_view name) {
  for (auto k : {NotificationKind::approval_request, NotificationKind::spoofing_attack,
                 NotificationKind::wrong_password, NotificationKind::unrecognized_face}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidArgument("unknown notification kind: " + std::string(name));
}

}  // namespace hearth::notify
