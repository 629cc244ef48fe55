#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hearth::chat {

enum class EntityGroup { room, device };

struct EntityEntry {
  std::string keyword;  // always starts with '$'
  EntityGroup group = EntityGroup::device;
};

/// Surface phrase -> keyword slot, e.g. "A/C" -> $thermostat,
/// "living room" -> $Room1. Lookup is case-insensitive.
class EntityLexicon {
 public:
  /// Thermostat and light synonyms plus the default lounge room ($Room1).
  static EntityLexicon builtin();

  /// Throws InvalidArgument when the keyword does not start with '$', the
  /// surface normalizes to nothing, or the surface is already bound to a
  /// different keyword.
  void add(std::string_view surface, std::string_view keyword, EntityGroup group);

  std::optional<EntityEntry> lookup(std::string_view surface) const;
  bool is_keyword(std::string_view token, EntityGroup group) const;
  std::vector<std::string> keywords(EntityGroup group) const;

  /// Longest normalized surface, in words.
  std::size_t max_phrase_words() const { return max_words_; }

  /// Keyword for the word sequence, if it is a known surface.
  const EntityEntry* find_phrase(const std::vector<std::string>& words) const;

 private:
  std::map<std::string, EntityEntry> phrases_;  // key: normalized words joined by ' '
  std::map<std::string, EntityGroup> keywords_;
  std::size_t max_words_ = 0;
};

/// Splits text into lowercase words. Punctuation separates words, except a
/// '.' between digits and a leading '-' on a number. Tokens starting with '$'
/// are keyword slots and keep their case.
std::vector<std::string> normalize_words(std::string_view text);

/// Lowercases, strips punctuation and replaces entity surface phrases by their
/// keyword slots (longest phrase first). Idempotent.
std::string canonicalize(std::string_view utterance, const EntityLexicon& lexicon);

}  // namespace hearth::chat
