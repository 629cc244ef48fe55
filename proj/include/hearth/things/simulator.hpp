#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "hearth/broker/broker.hpp"
#include "hearth/things/device.hpp"

namespace hearth::things {

/// Simulated microcontroller farm.
///
/// Sensors follow a clamped random walk (temperature steps uniform in
/// +-0.2 C, humidity in +-0.5 %RH) driven by one seeded generator, stepped
/// in registration order, so a fixed seed reproduces the reading sequence.
/// Published readings are quantized to 0.1. Actuators only change on
/// commands. Each device runs as a sequential actor on its own thread,
/// answering `/get` requests (sensors) and `/set` commands (actuators).
class Simulator {
 public:
  Simulator(broker::Broker& broker, Roster& roster, std::uint64_t seed,
            std::chrono::milliseconds tick_period = std::chrono::milliseconds(1000));
  ~Simulator();
  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;

  /// Adds the device to the roster, subscribes it to its request or command
  /// topic and publishes its first retained reading. Throws AlreadyExists for
  /// a duplicate id, UnknownRoom, or InvalidArgument for out-of-range values.
  void register_device(DeviceSpec spec);

  /// Advances every sensor one step and publishes (retained) the readings
  /// that are due. Returns what was published.
  std::vector<DeviceReading> simulate_tick();

  std::uint64_t tick() const;
  /// Current internal value of a device (unquantized for sensors).
  std::optional<double> value(std::string_view device_id) const;

  /// Background ticking every tick_period; idempotent.
  void start_ticking();
  void stop_ticking();

 private:
  struct Actor;

  void publish_reading(Actor& a);
  void run_actor(Actor& a, std::stop_token stop);

  broker::Broker& broker_;
  Roster& roster_;
  std::chrono::milliseconds tick_period_;

  mutable std::mutex mu_;  // guards actors_ and rng_; taken before any Actor::mu
  std::vector<std::unique_ptr<Actor>> actors_;
  std::mt19937_64 rng_;
  std::atomic<std::uint64_t> tick_{0};

  std::mutex ticker_mu_;
  std::condition_variable_any ticker_cv_;
  std::jthread ticker_;
};

/// Uniform double in [0, 1) from the top 53 bits of one generator draw.
double unit_uniform(std::mt19937_64& rng);

}  // namespace hearth::things
