#pragma once

#include <atomic>
#include <memory>
#include <string>

#include "hearth/service/hub.hpp"

namespace httplib {
class Server;
}

namespace hearth::service {

/// HTTP+JSON front end over a Hub, including the two server-sent event
/// streams. Tokens travel as `Authorization: Bearer <token>`; the event
/// streams also accept `?token=` because browsers cannot set headers on
/// EventSource.
class HttpServer {
 public:
  explicit HttpServer(Hub& hub);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket; port 0 picks a free port. Throws InternalError on
  /// bind failure. Returns the bound port.
  int bind(const std::string& host, int port);
  /// Serves until stop(); blocks.
  void run();
  void stop();
  int port() const { return port_; }

 private:
  void install_routes();

  Hub& hub_;
  std::unique_ptr<httplib::Server> server_;
  std::atomic<bool> stopping_{false};
  int port_ = 0;
};

/// Extracts the token from "Bearer <token>"; empty when absent or malformed.
std::string bearer_token(const std::string& authorization);

/// One server-sent event frame.
std::string sse_frame(std::string_view event, std::string_view data, std::optional<std::uint64_t> id = std::nullopt);

}  // namespace hearth::service
