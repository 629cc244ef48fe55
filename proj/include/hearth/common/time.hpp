#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>

namespace hearth {

using Clock = std::chrono::system_clock;
using Timestamp = std::chrono::time_point<Clock, std::chrono::microseconds>;

/// Injectable wall clock; tests pin it.
using ClockFn = std::function<Timestamp()>;

Timestamp now_utc();

/// ISO-8601 with microseconds and a trailing Z, e.g. 2024-01-02T03:04:05.000006Z.
std::string format_timestamp(Timestamp t);
/// Inverse of format_timestamp. Throws MalformedInput.
Timestamp parse_timestamp(std::string_view text);

}  // namespace hearth
