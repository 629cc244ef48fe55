#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hearth/common/access.hpp"

namespace hearth::chat {

enum class Action {
  get_temperature,
  get_humidity,
  get_light_state,
  set_light,
  set_thermostat,
  list_rooms,
  unknown,
  clarify_room,
};

std::string_view to_string(Action a);
/// Throws InvalidArgument.
Action parse_action(std::string_view name);

/// get_* read, set_* write, everything else none.
AccessClass access_class_of(Action a);

// Slot names bound by training patterns.
inline constexpr std::string_view kRoomSlot = "$room";
inline constexpr std::string_view kValueSlot = "$value";
inline constexpr std::string_view kStateSlot = "$state";

struct ChatIntent {
  Action action = Action::unknown;
  std::map<std::string, std::string> entities;  // slot -> value, e.g. $room -> $Room1
  AccessClass access_class = AccessClass::none;
  std::string canonical;          // canonical form of the utterance
  std::string response_template;  // from the matched training record

  bool operator==(const ChatIntent&) const = default;
};

ChatIntent make_intent(Action action, std::map<std::string, std::string> entities = {});

/// One line of the training file: `pattern TAB action TAB response-template`.
///
/// Pattern tokens are literal words, keyword slots such as $thermostat that
/// must appear verbatim, optional words written `[word]`, and the binding
/// slots $room (any room keyword), $value (a number) and $state (on/off).
struct TrainingRecord {
  std::vector<std::string> pattern;
  Action action = Action::unknown;
  std::string response_template;
  std::size_t line = 0;
};

/// Parses training text. Blank lines and lines starting with '#' are
/// skipped. Throws MalformedInput naming the line for malformed records.
std::vector<TrainingRecord> parse_training(std::string_view text);
std::vector<TrainingRecord> load_training_file(const std::string& path);

}  // namespace hearth::chat
