#include "hearth/service/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hearth/common/error.hpp"

namespace hearth::service {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::string default_training_file() { return std::string(HEARTH_DATA_DIR) + "/chatbot/training.tsv"; }

ServiceConfig default_config() {
  using things::DeviceKind;
  ServiceConfig cfg;
  cfg.rooms = {
      {"$Room1", "lounge", {"lounge", "living room", "sitting room"}},
      {"$Room2", "bedroom", {"bedroom", "bed room"}},
      {"$Room3", "kitchen", {"kitchen"}},
  };
  const std::chrono::milliseconds period{1000};
  cfg.devices = {
      {"lounge-temp", "$Room1", DeviceKind::temperature_sensor, 22.5, period},
      {"lounge-humidity", "$Room1", DeviceKind::humidity_sensor, 45.0, period},
      {"lounge-light", "$Room1", DeviceKind::light, 0.0, period},
      {"lounge-thermostat", "$Room1", DeviceKind::thermostat, 21.0, period},
      {"bedroom-temp", "$Room2", DeviceKind::temperature_sensor, 20.0, period},
      {"bedroom-humidity", "$Room2", DeviceKind::humidity_sensor, 50.0, period},
      {"bedroom-light", "$Room2", DeviceKind::light, 0.0, period},
      {"kitchen-temp", "$Room3", DeviceKind::temperature_sensor, 23.0, period},
      {"kitchen-light", "$Room3", DeviceKind::light, 1.0, period},
  };
  return cfg;
}

std::pair<std::string, int> parse_listen(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw InvalidArgument("listen address must be host:port, got '" + text + "'");
  int port = 0;
  try {
    std::size_t used = 0;
    port = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InvalidArgument("bad port in listen address '" + text + "'");
  }
  if (port < 0 || port > 65535) throw InvalidArgument("port out of range in '" + text + "'");
  return {text.substr(0, colon), port};
}

void validate(const ServiceConfig& cfg) {
  if (cfg.auth.dimension == 0) throw InvalidArgument("embedding_dimension must be positive");
  if (!(cfg.auth.match_threshold > 0.0) || cfg.auth.match_threshold > 1.0)
    throw InvalidArgument("match_threshold must be in (0, 1]");
  if (cfg.auth.liveness.min_frames == 0) throw InvalidArgument("liveness.min_frames must be positive");
  if (!(cfg.auth.liveness.motion_epsilon > 0.0))
    throw InvalidArgument("liveness.epsilon must be positive");
  if (cfg.admin.username.empty() || cfg.admin.password.empty())
    throw InvalidArgument("admin.username and admin.password are required");
  if (cfg.tick_period.count() <= 0) throw InvalidArgument("tick_period_ms must be positive");
  if (cfg.device_timeout.count() <= 0) throw InvalidArgument("device_timeout_ms must be positive");
  if (cfg.session_ttl.count() <= 0) throw InvalidArgument("session_ttl_hours must be positive");
  if (cfg.listen_port < 0 || cfg.listen_port > 65535) throw InvalidArgument("listen port out of range");
  if (cfg.data_dir.empty()) throw InvalidArgument("data_dir must not be empty");
}

namespace {

std::string resolve(const std::string& path, const std::string& base_dir) {
  if (path.empty()) return path;
  fs::path p(path);
  return p.is_absolute() ? path : (fs::path(base_dir) / p).lexically_normal().string();
}

}  // namespace

ServiceConfig parse_config(const std::string& json_text, const std::string& base_dir) {
  ServiceConfig cfg = default_config();
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");

  try {
    if (j.contains("listen")) std::tie(cfg.listen_host, cfg.listen_port) = parse_listen(j["listen"].get<std::string>());
    if (j.contains("auth_mode")) cfg.auth.mode = auth::parse_mode(j["auth_mode"].get<std::string>());
    if (j.contains("liveness")) {
      const auto& l = j["liveness"];
      if (l.contains("min_frames")) cfg.auth.liveness.min_frames = l["min_frames"].get<std::size_t>();
      if (l.contains("epsilon")) cfg.auth.liveness.motion_epsilon = l["epsilon"].get<double>();
    }
    if (j.contains("embedding_dimension")) cfg.auth.dimension = j["embedding_dimension"].get<std::size_t>();
    if (j.contains("match_threshold")) cfg.auth.match_threshold = j["match_threshold"].get<double>();
    if (j.contains("admin")) {
      const auto& a = j["admin"];
      if (a.contains("username")) cfg.admin.username = a["username"].get<std::string>();
      if (a.contains("password")) cfg.admin.password = a["password"].get<std::string>();
    }
    if (j.contains("data_dir")) cfg.data_dir = resolve(j["data_dir"].get<std::string>(), base_dir);
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tick_period_ms")) cfg.tick_period = std::chrono::milliseconds(j["tick_period_ms"].get<std::int64_t>());
    if (j.contains("device_timeout_ms"))
      cfg.device_timeout = std::chrono::milliseconds(j["device_timeout_ms"].get<std::int64_t>());
    if (j.contains("session_ttl_hours"))
      cfg.session_ttl = std::chrono::hours(j["session_ttl_hours"].get<std::int64_t>());
    if (j.contains("training_file")) cfg.training_file = resolve(j["training_file"].get<std::string>(), base_dir);
    if (j.contains("auto_tick")) cfg.auto_tick = j["auto_tick"].get<bool>();
    if (j.contains("rooms")) {
      cfg.rooms.clear();
      for (const auto& r : j["rooms"]) {
        things::RoomSpec room;
        room.slot = r.at("slot").get<std::string>();
        room.name = r.at("name").get<std::string>();
        if (r.contains("synonyms")) room.synonyms = r["synonyms"].get<std::vector<std::string>>();
        cfg.rooms.push_back(std::move(room));
      }
    }
    if (j.contains("devices")) {
      cfg.devices.clear();
      for (const auto& d : j["devices"]) {
        things::DeviceSpec spec;
        spec.device_id = d.at("id").get<std::string>();
        spec.room = d.at("room").get<std::string>();
        spec.kind = things::parse_device_kind(d.at("kind").get<std::string>());
        if (d.contains("initial")) {
          const auto& v = d["initial"];
          spec.initial_value = v.is_boolean() ? (v.get<bool>() ? 1.0 : 0.0) : v.get<double>();
        }
        if (d.contains("report_period_ms"))
          spec.report_period = std::chrono::milliseconds(d["report_period_ms"].get<std::int64_t>());
        cfg.devices.push_back(std::move(spec));
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad config value: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

ServiceConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), fs::path(path).parent_path().string().empty()
                                     ? "."
                                     : fs::path(path).parent_path().string());
}

}  // namespace hearth::service
