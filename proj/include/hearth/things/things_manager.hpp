#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "hearth/auth/types.hpp"
#include "hearth/broker/broker.hpp"
#include "hearth/chat/chatbot.hpp"
#include "hearth/things/device.hpp"

namespace hearth::things {

struct DispatchResult {
  enum class Kind { reading, acknowledgment, rooms };
  Kind kind = Kind::reading;
  DeviceReading reading;        // reading, or the echoed actuator state
  std::vector<RoomSpec> rooms;  // list_rooms
};

/// Placeholder values for the chatbot's response templates.
chat::ResponseData response_data(const DispatchResult& result);

struct DeviceStatus {
  DeviceSpec spec;
  std::optional<DeviceReading> latest;
};

/// Routes interpreted requests onto broker topics and collects the device
/// answers.
///
/// Queries answer from the retained reading when there is one, otherwise
/// publish a `/get` request and wait for the reading. Commands publish to
/// the actuator's `/set` topic and wait for the `/state` echo. The
/// permission check runs before anything is published.
class ThingsManager {
 public:
  ThingsManager(broker::Broker& broker, const Roster& roster,
                std::chrono::milliseconds timeout = std::chrono::milliseconds(2000));

  /// Throws PermissionDenied, DeviceTimeout, UnknownRoom, UnknownDevice, and
  /// InvalidArgument for intents that cannot be executed (unknown,
  /// clarify_room, bad values).
  DispatchResult dispatch(const chat::ChatIntent& intent, auth::Permission permission);

  /// Direct actuator command, e.g. from the device panel.
  DispatchResult command(const std::string& device_id, double value, auth::Permission permission);

  std::vector<DeviceStatus> devices() const;

 private:
  RoomSpec resolve_room(const chat::ChatIntent& intent, DeviceKind kind) const;
  DeviceSpec resolve_device(const RoomSpec& room, DeviceKind kind) const;
  DispatchResult query(const RoomSpec& room, const DeviceSpec& device);
  DispatchResult actuate(const RoomSpec& room, const DeviceSpec& device, double value);

  broker::Broker& broker_;
  const Roster& roster_;
  std::chrono::milliseconds timeout_;
};

}  // namespace hearth::things
