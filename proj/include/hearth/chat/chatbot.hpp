#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "hearth/chat/intent.hpp"
#include "hearth/chat/lexicon.hpp"

namespace hearth::chat {

inline constexpr std::string_view kFallbackResponse = "Sorry, I did not understand that.";
inline constexpr std::string_view kClarifyRoomResponse =
    "As temperature differs from one room to the other, you need to specify which room.";

/// Placeholder values for response templates, e.g. {"$temperature", "22.5"}.
using ResponseData = std::map<std::string, std::string>;

/// Shortest decimal text that round-trips, e.g. 22.5 -> "22.5", 25 -> "25".
std::string format_number(double v);

/// Rule-based intent matcher over a trained phrase table.
///
/// The lexicon and table are immutable snapshots; reload() swaps the table
/// atomically and in-flight calls finish on the snapshot they started with.
class Chatbot {
 public:
  Chatbot(EntityLexicon lexicon, std::vector<TrainingRecord> table);

  std::string canonicalize(std::string_view utterance) const;

  /// First matching record wins. Unmatched utterances give Action::unknown,
  /// except temperature questions with no room, which ask for the room.
  ChatIntent interpret(std::string_view utterance) const;

  /// Fills the intent's template from its entities, then from `data`.
  std::string respond(const ChatIntent& intent, const ResponseData& data = {}) const;

  void reload(std::vector<TrainingRecord> table);

  const EntityLexicon& lexicon() const { return lexicon_; }
  std::vector<TrainingRecord> table() const;

 private:
  std::shared_ptr<const std::vector<TrainingRecord>> snapshot() const;

  EntityLexicon lexicon_;
  mutable std::mutex mu_;
  std::shared_ptr<const std::vector<TrainingRecord>> table_;
};

/// Replaces `$name` placeholders found in `values`; unknown ones are kept.
std::string fill_template(std::string_view tmpl, const std::map<std::string, std::string>& values);

}  // namespace hearth::chat
