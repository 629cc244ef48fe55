#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "hearth/auth/login_manager.hpp"
#include "hearth/things/device.hpp"

namespace hearth::service {

struct AdminCredentials {
  std::string username = "admin";
  std::string password;
};

struct ServiceConfig {
  std::string listen_host = "127.0.0.1";
  int listen_port = 8080;
  auth::AuthConfig auth;
  AdminCredentials admin;
  std::string data_dir = "hearth-data";
  std::uint64_t seed = 42;
  std::chrono::milliseconds tick_period{1000};
  std::chrono::milliseconds device_timeout{2000};
  std::chrono::seconds session_ttl{std::chrono::hours(12)};
  std::string training_file;  // empty: the shipped table
  std::vector<things::RoomSpec> rooms;
  std::vector<things::DeviceSpec> devices;
  bool auto_tick = true;  // run the simulator clock in the background
};

/// Rooms and devices of the default home: lounge ($Room1), bedroom ($Room2)
/// and kitchen ($Room3).
ServiceConfig default_config();

/// Parses a JSON config; unspecified keys keep default_config() values.
/// Relative paths resolve against `base_dir`. Throws InvalidArgument.
ServiceConfig parse_config(const std::string& json_text, const std::string& base_dir = ".");
ServiceConfig load_config(const std::string& path);

/// Throws InvalidArgument naming the offending field.
void validate(const ServiceConfig& cfg);

/// "host:port" -> (host, port). Throws InvalidArgument.
std::pair<std::string, int> parse_listen(const std::string& text);

std::string default_training_file();

}  // namespace hearth::service
