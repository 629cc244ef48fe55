#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hearth::broker {

/// Concrete slash-separated topic name, e.g. "home/lounge/temperature".
/// At least one level, no empty levels, no wildcard characters.
class Topic {
 public:
  /// Throws MalformedInput.
  static Topic parse(std::string_view text);

  const std::string& str() const { return text_; }
  const std::vector<std::string>& levels() const { return levels_; }

  bool operator==(const Topic& o) const { return text_ == o.text_; }
  auto operator<=>(const Topic& o) const { return text_ <=> o.text_; }

 private:
  std::string text_;
  std::vector<std::string> levels_;
};

/// Subscription filter. A level is literal text, '+' (exactly one level) or
/// '#' (the parent level and everything below it; final level only).
class TopicFilter {
 public:
  /// Throws MalformedInput for '#' before the last level, wildcards embedded
  /// in a level, or empty levels.
  static TopicFilter parse(std::string_view text);

  const std::string& str() const { return text_; }
  const std::vector<std::string>& levels() const { return levels_; }

  bool operator==(const TopicFilter& o) const { return text_ == o.text_; }

 private:
  std::string text_;
  std::vector<std::string> levels_;
};

/// MQTT 3.1.1 matching semantics.
bool topic_matches(const TopicFilter& filter, const Topic& topic);

std::vector<std::string> split_levels(std::string_view text);

}  // namespace hearth::broker
