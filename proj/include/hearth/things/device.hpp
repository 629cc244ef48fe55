#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hearth/common/error.hpp"

namespace hearth::things {

enum class DeviceKind { temperature_sensor, humidity_sensor, light, thermostat };

std::string_view to_string(DeviceKind k);
/// Throws InvalidArgument.
DeviceKind parse_device_kind(std::string_view name);
constexpr bool is_sensor(DeviceKind k) {
  return k == DeviceKind::temperature_sensor || k == DeviceKind::humidity_sensor;
}
constexpr bool is_actuator(DeviceKind k) { return !is_sensor(k); }

inline constexpr double kMinTemperature = -40.0;
inline constexpr double kMaxTemperature = 60.0;
inline constexpr double kMinHumidity = 0.0;
inline constexpr double kMaxHumidity = 100.0;
// Accepted thermostat setpoints, in degrees Celsius.
inline constexpr double kMinSetpoint = 5.0;
inline constexpr double kMaxSetpoint = 35.0;

struct RoomSpec {
  std::string slot;                   // chatbot keyword, e.g. $Room1
  std::string name;                   // topic level, e.g. lounge
  std::vector<std::string> synonyms;  // surface phrases mapped to `slot`
};

struct DeviceSpec {
  std::string device_id;
  std::string room;  // room slot
  DeviceKind kind = DeviceKind::temperature_sensor;
  double initial_value = 0.0;  // lights: 0 off, 1 on
  std::chrono::milliseconds report_period{1000};
};

struct DeviceReading {
  std::string device_id;
  std::string room;
  DeviceKind kind = DeviceKind::temperature_sensor;
  double value = 0.0;  // lights: 0 off, 1 on
  std::uint64_t sampled_at = 0;  // simulation tick

  bool operator==(const DeviceReading&) const = default;
};

/// Readings travel as JSON objects; lights carry a boolean value.
std::string encode_reading(const DeviceReading& r);
/// Throws MalformedInput.
DeviceReading decode_reading(std::string_view payload);

/// Command payload for actuators, {"value": 25} or {"value": true}.
std::string encode_command(DeviceKind kind, double value);
/// Throws MalformedInput when the payload does not fit the kind.
double decode_command(DeviceKind kind, std::string_view payload);

// Topic conventions.
std::string sensor_topic(const RoomSpec& room, DeviceKind kind);
std::string sensor_request_topic(const RoomSpec& room, DeviceKind kind);
std::string command_topic(const RoomSpec& room, const DeviceSpec& d);
std::string state_topic(const RoomSpec& room, const DeviceSpec& d);
/// Topic where the device's readings or state appear.
std::string report_topic(const RoomSpec& room, const DeviceSpec& d);

/// Rooms and devices known to the home. Thread-safe.
class Roster {
 public:
  /// Throws AlreadyExists for duplicate slots or names, InvalidArgument for
  /// malformed specs.
  void add_room(RoomSpec room);
  /// Throws AlreadyExists for a duplicate id or a second device of the same
  /// kind in one room, UnknownRoom for an unknown room.
  void add_device(DeviceSpec spec);

  std::optional<RoomSpec> room(std::string_view slot) const;
  std::optional<DeviceSpec> device(std::string_view device_id) const;
  std::vector<RoomSpec> rooms() const;
  std::vector<DeviceSpec> devices() const;
  std::vector<DeviceSpec> devices_of(DeviceKind kind) const;
  std::optional<DeviceSpec> find(std::string_view room_slot, DeviceKind kind) const;

 private:
  mutable std::mutex mu_;
  std::vector<RoomSpec> rooms_;
  std::vector<DeviceSpec> devices_;
};

class UnknownRoom : public NotFound {
 public:
  using NotFound::NotFound;
};

class UnknownDevice : public NotFound {
 public:
  using NotFound::NotFound;
};

class PermissionDenied : public Error {
 public:
  using Error::Error;
};

class DeviceTimeout : public Error {
 public:
  using Error::Error;
};

}  // namespace hearth::things
