// hearthd: smart-home hub daemon.
//
//   hearthd serve --config hearthd.json [--listen host:port] [--data-dir dir]
//                 [--seed n] [--mode mfa|face_only|password_only]
//   hearthd demo  [same options]   seeds demo residents, then serves

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "hearth/service/config.hpp"
#include "hearth/service/demo.hpp"
#include "hearth/service/http_server.hpp"
#include "hearth/service/hub.hpp"
#include "hearth/simd/kernels.hpp"

namespace {

using namespace hearth;

struct Options {
  std::string config_path;
  std::optional<std::string> listen;
  std::optional<std::string> data_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
};

void add_options(CLI::App* cmd, Options& o, bool config_required) {
  auto* c = cmd->add_option("--config", o.config_path, "JSON config file");
  if (config_required) c->required();
  c->check(CLI::ExistingFile);
  cmd->add_option("--listen", o.listen, "host:port to listen on");
  cmd->add_option("--data-dir", o.data_dir, "directory for persisted accounts and notifications");
  cmd->add_option("--seed", o.seed, "simulator seed");
  cmd->add_option("--mode", o.mode, "authentication mode")
      ->check(CLI::IsMember({"mfa", "face_only", "password_only"}));
}

service::ServiceConfig resolve_config(const Options& o) {
  service::ServiceConfig cfg;
  if (!o.config_path.empty()) {
    cfg = service::load_config(o.config_path);
  } else {
    cfg = service::default_config();
    cfg.data_dir = "hearth-demo";
    cfg.admin.password = "admin";
  }
  if (o.listen) std::tie(cfg.listen_host, cfg.listen_port) = service::parse_listen(*o.listen);
  if (o.data_dir) cfg.data_dir = *o.data_dir;
  if (o.seed) cfg.seed = *o.seed;
  if (o.mode) cfg.auth.mode = auth::parse_mode(*o.mode);
  service::validate(cfg);
  return cfg;
}

int serve(const service::ServiceConfig& cfg, bool demo) {
  // Signals are taken synchronously by a watcher thread; every other thread
  // inherits the blocked mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  service::Hub hub(cfg);
  if (demo) {
    const auto faces = service::seed_demo_accounts(hub);
    const std::string path = cfg.data_dir + "/demo_faces.json";
    std::ofstream(path) << faces.dump(2) << '\n';
    std::cout << "demo accounts: resident (read_write), guest (read), newcomer (pending)\n"
              << "demo faces written to " << path << '\n';
  }

  service::HttpServer http(hub);
  const int port = http.bind(cfg.listen_host, cfg.listen_port);
  std::cout << "hearthd listening on " << cfg.listen_host << ':' << port << " (auth "
            << auth::to_string(cfg.auth.mode) << ", simd " << simd::to_string(simd::active_isa())
            << ", data " << cfg.data_dir << ")" << std::endl;

  std::jthread watcher([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    http.stop();
  });
  http.run();
  // run() also returns on a bind race or stop(); wake the watcher if needed.
  pthread_kill(watcher.native_handle(), SIGTERM);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hearthd: smart-home hub with face-verified log-in and a chatbot"};
  app.require_subcommand(1);

  Options serve_opts, demo_opts;
  auto* serve_cmd = app.add_subcommand("serve", "run the hub");
  add_options(serve_cmd, serve_opts, true);
  auto* demo_cmd = app.add_subcommand("demo", "seed demo residents and run the hub");
  add_options(demo_cmd, demo_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve_cmd) return serve(resolve_config(serve_opts), false);
    return serve(resolve_config(demo_opts), true);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "hearthd: %s\n", e.what());
    return 1;
  }
}
