#include "hearth/chat/lexicon.hpp"

#include <cctype>

#include "hearth/common/error.hpp"

namespace hearth::chat {
namespace {

bool is_word_byte(unsigned char c) { return std::isalnum(c) || c >= 0x80 || c == '_'; }

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

std::string join(const std::vector<std::string>& words, std::size_t first, std::size_t count) {
  std::string out;
  for (std::size_t i = first; i < first + count; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += words[i];
  }
  return out;
}

}  // namespace

std::vector<std::string> normalize_words(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  bool keyword = false;
  auto flush = [&] {
    if (!cur.empty() && cur != "$") words.push_back(cur);
    cur.clear();
    keyword = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    const auto next = i + 1 < text.size() ? static_cast<unsigned char>(text[i + 1]) : 0;
    if (c == '$') {
      flush();
      cur.push_back('$');
      keyword = true;
    } else if (is_word_byte(c)) {
      cur.push_back(keyword ? static_cast<char>(c) : static_cast<char>(std::tolower(c)));
    } else if (c == '.' && !keyword && !cur.empty() && is_digit(static_cast<unsigned char>(cur.back())) &&
               is_digit(next)) {
      cur.push_back('.');
    } else if (c == '-' && cur.empty() && is_digit(next)) {
      cur.push_back('-');
    } else {
      flush();
    }
  }
  flush();
  return words;
}

EntityLexicon EntityLexicon::builtin() {
  EntityLexicon lex;
  for (auto s : {"thermostat", "A/C", "air conditioner", "air conditioning"})
    lex.add(s, "$thermostat", EntityGroup::device);
  for (auto s : {"light", "lights", "lamp", "lamps"}) lex.add(s, "$light", EntityGroup::device);
  for (auto s : {"lounge", "living room", "sitting room"}) lex.add(s, "$Room1", EntityGroup::room);
  return lex;
}

void EntityLexicon::add(std::string_view surface, std::string_view keyword, EntityGroup group) {
  if (keyword.size() < 2 || keyword.front() != '$')
    throw InvalidArgument("entity keyword must start with '$': " + std::string(keyword));
  const auto words = normalize_words(surface);
  if (words.empty()) throw InvalidArgument("entity surface is empty: " + std::string(surface));
  for (const auto& w : words)
    if (w.front() == '$') throw InvalidArgument("entity surface must not contain a keyword");
  const auto key = join(words, 0, words.size());
  auto kw = keywords_.find(std::string(keyword));
  if (kw != keywords_.end() && kw->second != group)
    throw InvalidArgument("keyword used in two entity groups: " + std::string(keyword));
  auto it = phrases_.find(key);
  if (it != phrases_.end()) {
    if (it->second.keyword != keyword)
      throw InvalidArgument("surface '" + key + "' already maps to " + it->second.keyword);
    return;
  }
  phrases_.emplace(key, EntityEntry{std::string(keyword), group});
  keywords_.emplace(std::string(keyword), group);
  max_words_ = std::max(max_words_, words.size());
}

std::optional<EntityEntry> EntityLexicon::lookup(std::string_view surface) const {
  const auto words = normalize_words(surface);
  if (const auto* e = find_phrase(words)) return *e;
  return std::nullopt;
}

const EntityEntry* EntityLexicon::find_phrase(const std::vector<std::string>& words) const {
  auto it = phrases_.find(join(words, 0, words.size()));
  return it == phrases_.end() ? nullptr : &it->second;
}

bool EntityLexicon::is_keyword(std::string_view token, EntityGroup group) const {
  auto it = keywords_.find(std::string(token));
  return it != keywords_.end() && it->second == group;
}

std::vector<std::string> EntityLexicon::keywords(EntityGroup group) const {
  std::vector<std::string> out;
  for (const auto& [k, g] : keywords_)
    if (g == group) out.push_back(k);
  return out;
}

std::string canonicalize(std::string_view utterance, const EntityLexicon& lexicon) {
  const auto words = normalize_words(utterance);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < words.size()) {
    const EntityEntry* hit = nullptr;
    std::size_t len = 0;
    if (words[i].front() != '$') {
      for (std::size_t n = std::min(lexicon.max_phrase_words(), words.size() - i); n > 0; --n) {
        bool spans_keyword = false;
        for (std::size_t k = i; k < i + n; ++k) spans_keyword |= words[k].front() == '$';
        if (spans_keyword) continue;
        std::vector<std::string> span(words.begin() + static_cast<std::ptrdiff_t>(i),
                                      words.begin() + static_cast<std::ptrdiff_t>(i + n));
        if ((hit = lexicon.find_phrase(span))) {
          len = n;
          break;
        }
      }
    }
    if (hit) {
      out.push_back(hit->keyword);
      i += len;
    } else {
      out.push_back(words[i]);
      ++i;
    }
  }
  return join(out, 0, out.size());
}

}  // namespace hearth::chat
