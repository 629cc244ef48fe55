#include "hearth/things/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace hearth::things {

struct Simulator::Actor {
  DeviceSpec spec;
  RoomSpec room;
  std::mutex mu;
  double value = 0.0;
  std::uint64_t reported_tick = 0;
  std::chrono::milliseconds since_report{0};
  broker::Subscription inbox;
  std::jthread worker;
};

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

double quantize(double v) { return std::round(v * 10.0) / 10.0; }

struct WalkParams {
  double step;
  double lo;
  double hi;
};

WalkParams walk_for(DeviceKind k) {
  if (k == DeviceKind::temperature_sensor) return {0.2, kMinTemperature, kMaxTemperature};
  return {0.5, kMinHumidity, kMaxHumidity};
}

void validate_initial(const DeviceSpec& d) {
  auto in = [&](double lo, double hi) { return std::isfinite(d.initial_value) && d.initial_value >= lo && d.initial_value <= hi; };
  bool ok = true;
  switch (d.kind) {
    case DeviceKind::temperature_sensor:
      ok = in(kMinTemperature, kMaxTemperature);
      break;
    case DeviceKind::humidity_sensor:
      ok = in(kMinHumidity, kMaxHumidity);
      break;
    case DeviceKind::light:
      ok = d.initial_value == 0.0 || d.initial_value == 1.0;
      break;
    case DeviceKind::thermostat:
      ok = in(kMinSetpoint, kMaxSetpoint);
      break;
  }
  if (!ok) throw InvalidArgument("initial value out of range for device " + d.device_id);
}

}  // namespace

Simulator::Simulator(broker::Broker& broker, Roster& roster, std::uint64_t seed,
                     std::chrono::milliseconds tick_period)
    : broker_(broker), roster_(roster), tick_period_(tick_period), rng_(seed) {
  if (tick_period_.count() <= 0) throw InvalidArgument("tick period must be positive");
}

Simulator::~Simulator() {
  stop_ticking();
  std::vector<std::unique_ptr<Actor>> actors;
  {
    std::lock_guard lock(mu_);
    actors.swap(actors_);
  }
  // Stop every worker before joining any, so shutdown waits for at most one
  // poll interval. Subscriptions are released only after the joins.
  for (auto& a : actors) {
    a->worker.request_stop();
    a->inbox.stream().close();
  }
  for (auto& a : actors)
    if (a->worker.joinable()) a->worker.join();
}

void Simulator::publish_reading(Actor& a) {
  DeviceReading r{a.spec.device_id, a.spec.room, a.spec.kind,
                  is_sensor(a.spec.kind) ? quantize(a.value) : a.value, a.reported_tick};
  broker_.publish(report_topic(a.room, a.spec), encode_reading(r), true);
}

void Simulator::register_device(DeviceSpec spec) {
  validate_initial(spec);
  roster_.add_device(spec);
  const auto room = roster_.room(spec.room);

  auto actor = std::make_unique<Actor>();
  actor->spec = spec;
  actor->room = *room;
  actor->value = spec.initial_value;

  const auto inbox_topic = is_sensor(spec.kind) ? sensor_request_topic(*room, spec.kind)
                                                : command_topic(*room, spec);
  actor->inbox = broker_.subscribe(inbox_topic);

  Actor& ref = *actor;
  {
    std::lock_guard lock(mu_);
    actor->reported_tick = tick_;
    actors_.push_back(std::move(actor));
  }
  {
    std::lock_guard lock(ref.mu);
    publish_reading(ref);
  }
  ref.worker = std::jthread([this, &ref](std::stop_token st) { run_actor(ref, st); });
}

void Simulator::run_actor(Actor& a, std::stop_token stop) {
  while (!stop.stop_requested()) {
    auto msg = a.inbox.stream().pop(std::chrono::milliseconds(100));
    if (!msg) {
      if (a.inbox.stream().closed()) return;
      continue;
    }
    std::lock_guard lock(a.mu);
    if (is_sensor(a.spec.kind)) {
      publish_reading(a);
      continue;
    }
    try {
      a.value = decode_command(a.spec.kind, msg->value.payload);
    } catch (const MalformedInput&) {
      continue;  // invalid commands are ignored; no state echo
    }
    a.reported_tick = tick_.load();
    publish_reading(a);
  }
}

std::vector<DeviceReading> Simulator::simulate_tick() {
  std::lock_guard lock(mu_);
  const std::uint64_t now = ++tick_;
  std::vector<DeviceReading> published;
  for (auto& ap : actors_) {
    Actor& a = *ap;
    if (!is_sensor(a.spec.kind)) continue;
    const auto w = walk_for(a.spec.kind);
    const double step = (2.0 * unit_uniform(rng_) - 1.0) * w.step;
    std::lock_guard dev_lock(a.mu);
    a.value = std::clamp(a.value + step, w.lo, w.hi);
    a.since_report += tick_period_;
    if (a.since_report < a.spec.report_period) continue;
    a.since_report = std::chrono::milliseconds(0);
    a.reported_tick = now;
    publish_reading(a);
    published.push_back(DeviceReading{a.spec.device_id, a.spec.room, a.spec.kind, quantize(a.value), now});
  }
  return published;
}

std::uint64_t Simulator::tick() const { return tick_.load(); }

std::optional<double> Simulator::value(std::string_view device_id) const {
  std::lock_guard lock(mu_);
  for (const auto& a : actors_) {
    if (a->spec.device_id == device_id) {
      std::lock_guard dev_lock(a->mu);
      return a->value;
    }
  }
  return std::nullopt;
}

void Simulator::start_ticking() {
  std::lock_guard lock(ticker_mu_);
  if (ticker_.joinable()) return;
  ticker_ = std::jthread([this](std::stop_token st) {
    std::mutex m;
    std::unique_lock lk(m);
    while (!st.stop_requested()) {
      if (ticker_cv_.wait_for(lk, st, tick_period_, [] { return false; })) break;
      if (st.stop_requested()) break;
      simulate_tick();
    }
  });
}

void Simulator::stop_ticking() {
  std::jthread t;
  {
    std::lock_guard lock(ticker_mu_);
    t = std::move(ticker_);
  }
  if (t.joinable()) {
    t.request_stop();
    t.join();
  }
}

}  // namespace hearth::things
