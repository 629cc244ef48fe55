#include "hearth/service/http_server.hpp"

#include <chrono>

#include <httplib.h>

#include "hearth/things/device.hpp"

namespace hearth::service {

using json = nlohmann::json;

namespace {

constexpr auto kStreamPoll = std::chrono::milliseconds(500);

void send(httplib::Response& res, const Reply& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view code, std::string_view message) {
  send(res, Reply{status, json{{"error", code}, {"message", message}}});
}

/// Parses the request body; an empty body is an empty object.
std::optional<json> parse_body(const httplib::Request& req, httplib::Response& res) {
  if (req.body.empty()) return json::object();
  try {
    auto j = json::parse(req.body);
    if (j.is_object()) return j;
  } catch (const json::exception&) {
  }
  send_error(res, 400, "validation", "request body must be a JSON object");
  return std::nullopt;
}

std::string request_token(const httplib::Request& req, bool allow_query) {
  std::string token = bearer_token(req.get_header_value("Authorization"));
  if (token.empty() && allow_query && req.has_param("token")) token = req.get_param_value("token");
  return token;
}

std::optional<std::uint64_t> parse_id(const std::string& text) {
  if (text.empty() || text.size() > 19) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

/// Checks the stream's access up front and answers with the error if denied.
bool admit(Hub& hub, const std::string& token, Requirement need, httplib::Response& res) {
  try {
    hub.authorize(token, need);
    return true;
  } catch (const Unauthorized& e) {
    send_error(res, 401, "unauthorized", e.what());
  } catch (const Forbidden& e) {
    send_error(res, 403, "forbidden", e.what());
  }
  return false;
}

bool still_admitted(Hub& hub, const std::string& token, Requirement need) {
  try {
    hub.authorize(token, need);
    return true;
  } catch (const Error&) {
    return false;
  }
}

struct NotificationStreamState {
  notify::NotificationStream stream;
  std::uint64_t last_sent = 0;
  bool primed = false;
};

struct ReadingStreamState {
  broker::Subscription sub;
};

}  // namespace

std::string bearer_token(const std::string& authorization) {
  constexpr std::string_view prefix = "Bearer ";
  if (authorization.size() <= prefix.size() || authorization.compare(0, prefix.size(), prefix) != 0) return {};
  return authorization.substr(prefix.size());
}

std::string sse_frame(std::string_view event, std::string_view data, std::optional<std::uint64_t> id) {
  std::string out;
  if (id) out += "id: " + std::to_string(*id) + "\n";
  out += "event: ";
  out += event;
  out += "\ndata: ";
  out += data;
  out += "\n\n";
  return out;
}

HttpServer::HttpServer(Hub& hub) : hub_(hub), server_(std::make_unique<httplib::Server>()) {
  install_routes();
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw InternalError("cannot bind " + host + ":" + std::to_string(port));
  port_ = bound;
  return bound;
}

void HttpServer::run() { server_->listen_after_bind(); }

void HttpServer::stop() {
  stopping_ = true;
  server_->stop();
}

void HttpServer::install_routes() {
  auto& s = *server_;

  s.Post("/api/register", [this](const httplib::Request& req, httplib::Response& res) {
    if (auto body = parse_body(req, res)) send(res, hub_.register_user(*body));
  });
  s.Post("/api/login", [this](const httplib::Request& req, httplib::Response& res) {
    if (auto body = parse_body(req, res)) send(res, hub_.login(*body));
  });
  s.Post("/api/chat", [this](const httplib::Request& req, httplib::Response& res) {
    if (auto body = parse_body(req, res)) send(res, hub_.chat(request_token(req, false), *body));
  });
  s.Get("/api/devices", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, hub_.devices(request_token(req, false)));
  });
  s.Post(R"(/api/devices/([^/]+)/command)", [this](const httplib::Request& req, httplib::Response& res) {
    if (auto body = parse_body(req, res)) send(res, hub_.command(request_token(req, false), req.matches[1], *body));
  });
  s.Get("/api/admin/pending", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, hub_.pending(request_token(req, false)));
  });
  s.Get("/api/admin/notifications", [this](const httplib::Request& req, httplib::Response& res) {
    std::optional<std::uint64_t> since;
    if (req.has_param("since_id")) {
      since = parse_id(req.get_param_value("since_id"));
      if (!since) return send_error(res, 400, "validation", "since_id must be a non-negative integer");
    }
    send(res, hub_.notifications(request_token(req, false), since));
  });
  s.Post("/api/admin/approval", [this](const httplib::Request& req, httplib::Response& res) {
    if (auto body = parse_body(req, res)) send(res, hub_.approval(request_token(req, false), *body));
  });
  s.Post(R"(/api/admin/ack/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    const auto id = parse_id(req.matches[1]);
    if (!id) return send_error(res, 400, "validation", "notification id must be an integer");
    send(res, hub_.acknowledge(request_token(req, false), *id));
  });

  // Notifications: replays everything after since_id (or Last-Event-ID),
  // then follows the live log. After a gap it resyncs from the log itself.
  s.Get("/api/admin/events", [this](const httplib::Request& req, httplib::Response& res) {
    const std::string token = request_token(req, true);
    if (!admit(hub_, token, Requirement::admin, res)) return;
    std::string since_text = req.has_param("since_id") ? req.get_param_value("since_id")
                                                       : req.get_header_value("Last-Event-ID");
    std::uint64_t since = 0;
    if (!since_text.empty()) {
      const auto parsed = parse_id(since_text);
      if (!parsed) return send_error(res, 400, "validation", "since_id must be a non-negative integer");
      since = *parsed;
    }
    auto& log = hub_.notification_log();
    auto state = std::make_shared<NotificationStreamState>();
    state->stream = log.subscribe();
    state->last_sent = since;
    res.set_header("Cache-Control", "no-cache");
    res.set_chunked_content_provider(
        "text/event-stream",
        [this, state, token, &log](std::size_t, httplib::DataSink& sink) {
          if (stopping_ || !still_admitted(hub_, token, Requirement::admin)) {
            sink.done();
            return true;
          }
          std::string out;
          auto catch_up = [&] {
            for (const auto& n : log.list(std::nullopt, state->last_sent)) {
              out += sse_frame("notification", to_json(n).dump(), n.id);
              state->last_sent = n.id;
            }
          };
          if (!state->primed) {
            catch_up();
            state->primed = true;
          }
          if (auto item = state->stream->pop(kStreamPoll)) {
            if (item->gap) {
              out += sse_frame("gap", json{{"last_id", state->last_sent}}.dump());
              catch_up();
            }
            if (item->value.id > state->last_sent) {
              out += sse_frame("notification", to_json(item->value).dump(), item->value.id);
              state->last_sent = item->value.id;
            }
          }
          if (out.empty()) out = ": keep-alive\n\n";
          return sink.write(out.data(), out.size());
        },
        [state, &log](bool) { log.unsubscribe(state->stream); });
  });

  // Device readings and actuator states, starting with the retained ones.
  s.Get("/api/events", [this](const httplib::Request& req, httplib::Response& res) {
    const std::string token = request_token(req, true);
    if (!admit(hub_, token, Requirement::read, res)) return;
    auto state = std::make_shared<ReadingStreamState>();
    state->sub = hub_.broker().subscribe("home/#", 1024);
    res.set_header("Cache-Control", "no-cache");
    res.set_chunked_content_provider(
        "text/event-stream",
        [this, state, token](std::size_t, httplib::DataSink& sink) {
          if (stopping_ || !still_admitted(hub_, token, Requirement::read)) {
            sink.done();
            return true;
          }
          std::string out;
          if (auto item = state->sub.stream().pop(kStreamPoll)) {
            if (item->gap) out += sse_frame("gap", "{}");
            const auto& levels = item->value.topic.levels();
            const auto& last = levels.back();
            if (last != "get" && last != "set") {
              try {
                const auto reading = things::decode_reading(item->value.payload);
                json data = to_json(reading);
                data["topic"] = item->value.topic.str();
                out += sse_frame("reading", data.dump(), item->value.publish_seq);
              } catch (const MalformedInput&) {
                // Foreign traffic on home/#; not a reading.
              }
            }
          }
          if (out.empty()) out = ": keep-alive\n\n";
          return sink.write(out.data(), out.size());
        },
        [state](bool) { state->sub.unsubscribe(); });
  });

  s.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    send_error(res, 500, "internal", what);
  });
}

}  // namespace hearth::service
