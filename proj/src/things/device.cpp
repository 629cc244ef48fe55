#include "hearth/things/device.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace hearth::things {

using json = nlohmann::json;

std::string_view to_string(DeviceKind k) {
  switch (k) {
    case DeviceKind::temperature_sensor:
      return "temperature_sensor";
    case DeviceKind::humidity_sensor:
      return "humidity_sensor";
    case DeviceKind::light:
      return "light";
    case DeviceKind::thermostat:
      return "thermostat";
  }
  return "unknown";
}

DeviceKind parse_device_kind(std::string_view name) {
  for (auto k : {DeviceKind::temperature_sensor, DeviceKind::humidity_sensor, DeviceKind::light,
                 DeviceKind::thermostat})
    if (to_string(k) == name) return k;
  throw InvalidArgument("unknown device kind: " + std::string(name));
}

std::string encode_reading(const DeviceReading& r) {
  json j{{"device_id", r.device_id},
         {"room", r.room},
         {"kind", to_string(r.kind)},
         {"tick", r.sampled_at}};
  if (r.kind == DeviceKind::light)
    j["value"] = r.value != 0.0;
  else
    j["value"] = r.value;
  return j.dump();
}

DeviceReading decode_reading(std::string_view payload) {
  try {
    const auto j = json::parse(payload);
    DeviceReading r;
    r.device_id = j.at("device_id").get<std::string>();
    r.room = j.at("room").get<std::string>();
    r.kind = parse_device_kind(j.at("kind").get<std::string>());
    const auto& v = j.at("value");
    r.value = v.is_boolean() ? (v.get<bool>() ? 1.0 : 0.0) : v.get<double>();
    r.sampled_at = j.at("tick").get<std::uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad reading payload: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw MalformedInput(std::string("bad reading payload: ") + e.what());
  }
}

std::string encode_command(DeviceKind kind, double value) {
  json j;
  if (kind == DeviceKind::light)
    j["value"] = value != 0.0;
  else
    j["value"] = value;
  return j.dump();
}

double decode_command(DeviceKind kind, std::string_view payload) {
  json j;
  try {
    j = json::parse(payload);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad command payload: ") + e.what());
  }
  if (!j.is_object() || !j.contains("value")) throw MalformedInput("command payload needs a value");
  const auto& v = j["value"];
  switch (kind) {
    case DeviceKind::light:
      if (v.is_boolean()) return v.get<bool>() ? 1.0 : 0.0;
      if (v.is_string() && (v == "on" || v == "off")) return v == "on" ? 1.0 : 0.0;
      if (v.is_number() && (v == 0 || v == 1)) return v.get<double>();
      throw MalformedInput("light commands take on/off");
    case DeviceKind::thermostat: {
      if (!v.is_number()) throw MalformedInput("thermostat commands take a number");
      const double d = v.get<double>();
      if (!std::isfinite(d) || d < kMinSetpoint || d > kMaxSetpoint)
        throw MalformedInput("thermostat setpoint out of range");
      return d;
    }
    default:
      throw MalformedInput("sensors do not accept commands");
  }
}

namespace {

std::string_view sensor_level(DeviceKind k) {
  return k == DeviceKind::temperature_sensor ? "temperature" : "humidity";
}

bool valid_level(std::string_view s) {
  return !s.empty() && s.find_first_of("/+#") == std::string_view::npos;
}

}  // namespace

std::string sensor_topic(const RoomSpec& room, DeviceKind kind) {
  return "home/" + room.name + "/" + std::string(sensor_level(kind));
}

std::string sensor_request_topic(const RoomSpec& room, DeviceKind kind) {
  return sensor_topic(room, kind) + "/get";
}

std::string command_topic(const RoomSpec& room, const DeviceSpec& d) {
  return "home/" + room.name + "/" + d.device_id + "/set";
}

std::string state_topic(const RoomSpec& room, const DeviceSpec& d) {
  return "home/" + room.name + "/" + d.device_id + "/state";
}

std::string report_topic(const RoomSpec& room, const DeviceSpec& d) {
  return is_sensor(d.kind) ? sensor_topic(room, d.kind) : state_topic(room, d);
}

void Roster::add_room(RoomSpec room) {
  if (room.slot.size() < 2 || room.slot.front() != '$')
    throw InvalidArgument("room slot must start with '$': " + room.slot);
  if (!valid_level(room.name)) throw InvalidArgument("room name is not a valid topic level: " + room.name);
  std::lock_guard lock(mu_);
  for (const auto& r : rooms_)
    if (r.slot == room.slot || r.name == room.name)
      throw AlreadyExists("duplicate room: " + room.slot + " / " + room.name);
  rooms_.push_back(std::move(room));
}

void Roster::add_device(DeviceSpec spec) {
  if (!valid_level(spec.device_id) || spec.device_id == "temperature" || spec.device_id == "humidity")
    throw InvalidArgument("device id is not usable as a topic level: " + spec.device_id);
  if (spec.report_period.count() <= 0) throw InvalidArgument("report period must be positive");
  std::lock_guard lock(mu_);
  if (std::none_of(rooms_.begin(), rooms_.end(), [&](const RoomSpec& r) { return r.slot == spec.room; }))
    throw UnknownRoom("unknown room: " + spec.room);
  for (const auto& d : devices_) {
    if (d.device_id == spec.device_id) throw AlreadyExists("duplicate device id: " + spec.device_id);
    if (d.kind == spec.kind && d.room == spec.room)
      throw AlreadyExists("room " + spec.room + " already has a " + std::string(to_string(spec.kind)));
  }
  devices_.push_back(std::move(spec));
}

std::optional<RoomSpec> Roster::room(std::string_view slot) const {
  std::lock_guard lock(mu_);
  for (const auto& r : rooms_)
    if (r.slot == slot) return r;
  return std::nullopt;
}

std::optional<DeviceSpec> Roster::device(std::string_view device_id) const {
  std::lock_guard lock(mu_);
  for (const auto& d : devices_)
    if (d.device_id == device_id) return d;
  return std::nullopt;
}

std::vector<RoomSpec> Roster::rooms() const {
  std::lock_guard lock(mu_);
  return rooms_;
}

std::vector<DeviceSpec> Roster::devices() const {
  std::lock_guard lock(mu_);
  return devices_;
}

std::vector<DeviceSpec> Roster::devices_of(DeviceKind kind) const {
  std::lock_guard lock(mu_);
  std::vector<DeviceSpec> out;
  for (const auto& d : devices_)
    if (d.kind == kind) out.push_back(d);
  return out;
}

std::optional<DeviceSpec> Roster::find(std::string_view room_slot, DeviceKind kind) const {
  std::lock_guard lock(mu_);
  for (const auto& d : devices_)
    if (d.room == room_slot && d.kind == kind) return d;
  return std::nullopt;
}

}  // namespace hearth::things
