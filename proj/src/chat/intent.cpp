#include "hearth/chat/intent.hpp"

#include <fstream>
#include <sstream>

#include "hearth/chat/lexicon.hpp"
#include "hearth/common/error.hpp"

namespace hearth::chat {
namespace {

constexpr Action kAllActions[] = {
    Action::get_temperature, Action::get_humidity, Action::get_light_state, Action::set_light,
    Action::set_thermostat,  Action::list_rooms,   Action::unknown,         Action::clarify_room,
};

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> pattern_tokens(std::string_view pattern, std::size_t line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(pattern)};
  std::string raw;
  while (in >> raw) {
    const bool optional = raw.size() > 2 && raw.front() == '[' && raw.back() == ']';
    const auto body = optional ? raw.substr(1, raw.size() - 2) : raw;
    auto words = normalize_words(body);
    if (words.size() != 1 || words.front() != body)
      throw MalformedInput("training line " + std::to_string(line) + ": pattern token '" + raw +
                           "' is not in canonical form");
    out.push_back(optional ? "[" + body + "]" : body);
  }
  if (out.empty()) throw MalformedInput("training line " + std::to_string(line) + ": empty pattern");
  return out;
}

}  // namespace

std::string_view to_string(Action a) {
  switch (a) {
    case Action::get_temperature:
      return "get_temperature";
    case Action::get_humidity:
      return "get_humidity";
    case Action::get_light_state:
      return "get_light_state";
    case Action::set_light:
      return "set_light";
    case Action::set_thermostat:
      return "set_thermostat";
    case Action::list_rooms:
      return "list_rooms";
    case Action::unknown:
      return "unknown";
    case Action::clarify_room:
      return "clarify_room";
  }
  return "unknown";
}

Action parse_action(std::string_view name) {
  for (auto a : kAllActions)
    if (to_string(a) == name) return a;
  throw InvalidArgument("unknown chat action: " + std::string(name));
}

AccessClass access_class_of(Action a) {
  switch (a) {
    case Action::get_temperature:
    case Action::get_humidity:
    case Action::get_light_state:
      return AccessClass::read;
    case Action::set_light:
    case Action::set_thermostat:
      return AccessClass::write;
    default:
      return AccessClass::none;
  }
}

ChatIntent make_intent(Action action, std::map<std::string, std::string> entities) {
  ChatIntent intent;
  intent.action = action;
  intent.entities = std::move(entities);
  intent.access_class = access_class_of(action);
  return intent;
}

std::vector<TrainingRecord> parse_training(std::string_view text) {
  std::vector<TrainingRecord> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? end : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#') continue;

    const auto fields = split_tabs(line);
    if (fields.size() != 3)
      throw MalformedInput("training line " + std::to_string(line_no) +
                           ": expected 3 tab-separated fields, got " + std::to_string(fields.size()));
    TrainingRecord rec;
    rec.line = line_no;
    rec.pattern = pattern_tokens(fields[0], line_no);
    try {
      rec.action = parse_action(fields[1]);
    } catch (const InvalidArgument& e) {
      throw MalformedInput("training line " + std::to_string(line_no) + ": " + e.what());
    }
    rec.response_template = fields[2];
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<TrainingRecord> load_training_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("cannot open training file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_training(buf.str());
}

}  // namespace hearth::chat
