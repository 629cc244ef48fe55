#include "hearth/broker/topic.hpp"

#include "hearth/common/error.hpp"

namespace hearth::broker {

std::vector<std::string> split_levels(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('/', start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Topic Topic::parse(std::string_view text) {
  if (text.empty()) throw MalformedInput("topic must not be empty");
  Topic t;
  t.text_ = std::string(text);
  t.levels_ = split_levels(text);
  for (const auto& level : t.levels_) {
    if (level.empty()) throw MalformedInput("topic has an empty level: " + t.text_);
    if (level.find_first_of("+#") != std::string::npos)
      throw MalformedInput("topic must not contain wildcards: " + t.text_);
  }
  return t;
}

TopicFilter TopicFilter::parse(std::string_view text) {
  if (text.empty()) throw MalformedInput("topic filter must not be empty");
  TopicFilter f;
  f.text_ = std::string(text);
  f.levels_ = split_levels(text);
  for (std::size_t i = 0; i < f.levels_.size(); ++i) {
    const auto& level = f.levels_[i];
    if (level.empty()) throw MalformedInput("topic filter has an empty level: " + f.text_);
    if (level == "#") {
      if (i + 1 != f.levels_.size())
        throw MalformedInput("'#' must be the last level of a filter: " + f.text_);
    } else if (level != "+" && level.find_first_of("+#") != std::string::npos) {
      throw MalformedInput("wildcards must occupy a whole level: " + f.text_);
    }
  }
  return f;
}

bool topic_matches(const TopicFilter& filter, const Topic& topic) {
  const auto& fl = filter.levels();
  const auto& tl = topic.levels();
  std::size_t i = 0;
  for (; i < fl.size(); ++i) {
    if (fl[i] == "#") return true;  // also covers the parent level itself
    if (i >= tl.size()) return false;
    if (fl[i] != "+" && fl[i] != tl[i]) return false;
  }
  return i == tl.size();
}

}  // namespace hearth::broker
