#include "hearth/chat/chatbot.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace hearth::chat {
namespace {

using Bindings = std::map<std::string, std::string>;

bool is_number(const std::string& token) {
  double v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  return ec == std::errc{} && ptr == end;
}

bool match_from(const std::vector<std::string>& pattern, std::size_t pi,
                const std::vector<std::string>& words, std::size_t wi, const EntityLexicon& lexicon,
                Bindings& out) {
  if (pi == pattern.size()) return wi == words.size();
  const std::string& p = pattern[pi];

  if (p.size() > 2 && p.front() == '[') {
    const std::string_view word(p.data() + 1, p.size() - 2);
    if (wi < words.size() && words[wi] == word && match_from(pattern, pi + 1, words, wi + 1, lexicon, out))
      return true;
    return match_from(pattern, pi + 1, words, wi, lexicon, out);
  }
  if (wi == words.size()) return false;
  const std::string& w = words[wi];

  bool binds = false;
  if (p == kRoomSlot) {
    if (!lexicon.is_keyword(w, EntityGroup::room)) return false;
    binds = true;
  } else if (p == kValueSlot) {
    if (!is_number(w)) return false;
    binds = true;
  } else if (p == kStateSlot) {
    if (w != "on" && w != "off") return false;
    binds = true;
  } else if (p != w) {
    return false;
  }

  if (!binds) return match_from(pattern, pi + 1, words, wi + 1, lexicon, out);
  const auto saved = out;
  out[p] = w;
  if (match_from(pattern, pi + 1, words, wi + 1, lexicon, out)) return true;
  out = saved;
  return false;
}

std::vector<std::string> split_spaces(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string fill_template(std::string_view tmpl, const std::map<std::string, std::string>& values) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '$') {
      out.push_back(tmpl[i++]);
      continue;
    }
    std::size_t j = i + 1;
    while (j < tmpl.size() &&
           (std::isalnum(static_cast<unsigned char>(tmpl[j])) || tmpl[j] == '_'))
      ++j;
    const std::string key(tmpl.substr(i, j - i));
    auto it = values.find(key);
    out += it != values.end() ? it->second : key;
    i = j;
  }
  return out;
}

Chatbot::Chatbot(EntityLexicon lexicon, std::vector<TrainingRecord> table)
    : lexicon_(std::move(lexicon)),
      table_(std::make_shared<const std::vector<TrainingRecord>>(std::move(table))) {}

std::shared_ptr<const std::vector<TrainingRecord>> Chatbot::snapshot() const {
  std::lock_guard lock(mu_);
  return table_;
}

void Chatbot::reload(std::vector<TrainingRecord> table) {
  auto next = std::make_shared<const std::vector<TrainingRecord>>(std::move(table));
  std::lock_guard lock(mu_);
  table_ = std::move(next);
}

std::vector<TrainingRecord> Chatbot::table() const { return *snapshot(); }

std::string Chatbot::canonicalize(std::string_view utterance) const {
  return chat::canonicalize(utterance, lexicon_);
}

ChatIntent Chatbot::interpret(std::string_view utterance) const {
  const auto table = snapshot();
  const std::string canonical = canonicalize(utterance);
  const auto words = split_spaces(canonical);

  for (const auto& rec : *table) {
    Bindings bindings;
    if (!match_from(rec.pattern, 0, words, 0, lexicon_, bindings)) continue;
    ChatIntent intent = make_intent(rec.action, std::move(bindings));
    intent.canonical = canonical;
    intent.response_template = rec.response_template;
    if (intent.action == Action::get_temperature && !intent.entities.contains(std::string(kRoomSlot))) {
      intent = make_intent(Action::clarify_room);
      intent.canonical = canonical;
    }
    return intent;
  }

  const bool mentions_temperature = std::find(words.begin(), words.end(), "temperature") != words.end();
  const bool names_room = std::any_of(words.begin(), words.end(), [&](const std::string& w) {
    return lexicon_.is_keyword(w, EntityGroup::room);
  });
  ChatIntent intent = make_intent(mentions_temperature && !names_room ? Action::clarify_room
                                                                      : Action::unknown);
  intent.canonical = canonical;
  return intent;
}

std::string Chatbot::respond(const ChatIntent& intent, const ResponseData& data) const {
  if (intent.response_template.empty()) {
    if (intent.action == Action::clarify_room) return std::string(kClarifyRoomResponse);
    return std::string(kFallbackResponse);
  }
  std::map<std::string, std::string> values = data;
  for (const auto& [slot, value] : intent.entities) values[slot] = value;
  return fill_template(intent.response_template, values);
}

}  // namespace hearth::chat
