#include "hearth/things/things_manager.hpp"

#include <charconv>
#include <cmath>

namespace hearth::things {

using chat::Action;

namespace {

DeviceKind kind_for(Action a) {
  switch (a) {
    case Action::get_temperature:
      return DeviceKind::temperature_sensor;
    case Action::get_humidity:
      return DeviceKind::humidity_sensor;
    case Action::get_light_state:
    case Action::set_light:
      return DeviceKind::light;
    case Action::set_thermostat:
      return DeviceKind::thermostat;
    default:
      throw InvalidArgument("intent " + std::string(chat::to_string(a)) + " has no device");
  }
}

double parse_value(const std::string& text) {
  double v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v))
    throw InvalidArgument("not a number: " + text);
  return v;
}

void check_value(DeviceKind kind, double value) {
  if (kind == DeviceKind::light && value != 0.0 && value != 1.0)
    throw InvalidArgument("light commands take on/off");
  if (kind == DeviceKind::thermostat && (value < kMinSetpoint || value > kMaxSetpoint))
    throw InvalidArgument("thermostat setpoint must be between " + chat::format_number(kMinSetpoint) +
                          " and " + chat::format_number(kMaxSetpoint));
}

}  // namespace

chat::ResponseData response_data(const DispatchResult& result) {
  chat::ResponseData data;
  if (result.kind == DispatchResult::Kind::rooms) {
    std::string names;
    for (const auto& r : result.rooms) {
      if (!names.empty()) names += ", ";
      names += r.slot + " (" + r.name + ")";
    }
    data["$rooms"] = names;
    return data;
  }
  const auto& r = result.reading;
  switch (r.kind) {
    case DeviceKind::temperature_sensor:
      data["$temperature"] = chat::format_number(r.value);
      break;
    case DeviceKind::humidity_sensor:
      data["$humidity"] = chat::format_number(r.value);
      break;
    case DeviceKind::light:
      data["$light_state"] = r.value != 0.0 ? "on" : "off";
      data["$state"] = data["$light_state"];
      break;
    case DeviceKind::thermostat:
      data["$value"] = chat::format_number(r.value);
      break;
  }
  data["$room"] = r.room;
  return data;
}

ThingsManager::ThingsManager(broker::Broker& broker, const Roster& roster,
                             std::chrono::milliseconds timeout)
    : broker_(broker), roster_(roster), timeout_(timeout) {}

RoomSpec ThingsManager::resolve_room(const chat::ChatIntent& intent, DeviceKind kind) const {
  auto it = intent.entities.find(std::string(chat::kRoomSlot));
  if (it != intent.entities.end()) {
    auto room = roster_.room(it->second);
    if (!room) throw UnknownRoom("unknown room: " + it->second);
    return *room;
  }
  // No room named: fine when exactly one such device exists.
  const auto candidates = roster_.devices_of(kind);
  if (candidates.size() != 1)
    throw UnknownRoom("please name the room for the " + std::string(to_string(kind)));
  return *roster_.room(candidates.front().room);
}

DeviceSpec ThingsManager::resolve_device(const RoomSpec& room, DeviceKind kind) const {
  auto d = roster_.find(room.slot, kind);
  if (!d) throw UnknownDevice("no " + std::string(to_string(kind)) + " in " + room.slot);
  return *d;
}

DispatchResult ThingsManager::dispatch(const chat::ChatIntent& intent, auth::Permission permission) {
  if (!auth::permits(permission, intent.access_class))
    throw PermissionDenied("permission " + std::string(auth::to_string(permission)) +
                           " does not allow " + std::string(to_string(intent.access_class)) +
                           " access");
  switch (intent.action) {
    case Action::list_rooms:
      return DispatchResult{DispatchResult::Kind::rooms, {}, roster_.rooms()};
    case Action::unknown:
    case Action::clarify_room:
      throw InvalidArgument("intent " + std::string(chat::to_string(intent.action)) + " is not executable");
    default:
      break;
  }

  const DeviceKind kind = kind_for(intent.action);
  const RoomSpec room = resolve_room(intent, kind);
  const DeviceSpec device = resolve_device(room, kind);

  if (intent.access_class == AccessClass::read) return query(room, device);

  double value = 0.0;
  if (intent.action == Action::set_light) {
    auto st = intent.entities.find(std::string(chat::kStateSlot));
    if (st == intent.entities.end()) throw InvalidArgument("light command without on/off");
    value = st->second == "on" ? 1.0 : 0.0;
  } else {
    auto v = intent.entities.find(std::string(chat::kValueSlot));
    if (v == intent.entities.end()) throw InvalidArgument("thermostat command without a value");
    value = parse_value(v->second);
  }
  check_value(kind, value);
  return actuate(room, device, value);
}

DispatchResult ThingsManager::command(const std::string& device_id, double value,
                                      auth::Permission permission) {
  if (!auth::allows_write(permission))
    throw PermissionDenied("permission " + std::string(auth::to_string(permission)) +
                           " does not allow write access");
  const auto device = roster_.device(device_id);
  if (!device) throw UnknownDevice("unknown device: " + device_id);
  if (!is_actuator(device->kind)) throw InvalidArgument("device " + device_id + " is a sensor");
  check_value(device->kind, value);
  return actuate(*roster_.room(device->room), *device, value);
}

DispatchResult ThingsManager::query(const RoomSpec& room, const DeviceSpec& device) {
  const auto topic = broker::Topic::parse(report_topic(room, device));
  if (auto retained = broker_.retained(topic))
    return DispatchResult{DispatchResult::Kind::reading, decode_reading(retained->payload), {}};

  auto sub = broker_.subscribe(topic.str());
  broker_.publish(sensor_request_topic(room, device.kind), "{}");
  const auto deadline = std::chrono::steady_clock::now() + timeout_;
  while (true) {
    const auto left = deadline - std::chrono::steady_clock::now();
    if (left <= std::chrono::steady_clock::duration::zero()) break;
    auto msg = sub.stream().pop(left);
    if (!msg) break;
    if (msg->value.payload.empty()) continue;
    return DispatchResult{DispatchResult::Kind::reading, decode_reading(msg->value.payload), {}};
  }
  throw DeviceTimeout("no reading from " + device.device_id);
}

DispatchResult ThingsManager::actuate(const RoomSpec& room, const DeviceSpec& device, double value) {
  auto sub = broker_.subscribe(state_topic(room, device));
  const auto before = broker_.last_seq();
  broker_.publish(command_topic(room, device), encode_command(device.kind, value));

  const auto deadline = std::chrono::steady_clock::now() + timeout_;
  while (true) {
    const auto left = deadline - std::chrono::steady_clock::now();
    if (left <= std::chrono::steady_clock::duration::zero()) break;
    auto msg = sub.stream().pop(left);
    if (!msg) break;
    if (msg->value.publish_seq <= before || msg->value.payload.empty()) continue;  // replayed state
    auto echo = decode_reading(msg->value.payload);
    if (echo.value != value) continue;  // a concurrent command's echo
    return DispatchResult{DispatchResult::Kind::acknowledgment, std::move(echo), {}};
  }
  throw DeviceTimeout("no state echo from " + device.device_id);
}

std::vector<DeviceStatus> ThingsManager::devices() const {
  std::vector<DeviceStatus> out;
  for (const auto& d : roster_.devices()) {
    DeviceStatus st{d, std::nullopt};
    if (auto room = roster_.room(d.room)) {
      if (auto msg = broker_.retained(broker::Topic::parse(report_topic(*room, d))))
        st.latest = decode_reading(msg->payload);
    }
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace hearth::things
