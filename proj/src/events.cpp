#include "durvote/events.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <unordered_set>

#include "durvote/errors.hpp"
#include "durvote/text.hpp"

namespace durvote {

std::string Event::surface() const {
  std::string out = verb_lemma;
  for (const std::string& tok : object_tokens) {
    out += ' ';
    out += tok;
  }
  return out;
}

std::string event_id_for(const EventKey& key) {
  std::string id = key.verb_lemma;
  for (const std::string& tok : key.object_tokens) {
    id += '_';
    id += tok;
  }
  return id;
}

PhraseParseResult parse_phrase_list(std::span<const std::string> lines) {
  PhraseParseResult result;
  std::unordered_set<std::string> seen;
  int line_number = 0;
  for (const std::string& raw : lines) {
    ++line_number;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!seen.insert(std::string(line)).second) continue;

    RawPhrase phrase;
    bool bad = false;
    for (const std::string& piece : split_whitespace(line)) {
      const size_t slash = piece.find('/');
      if (slash == std::string::npos) {
        phrase.tokens.push_back({piece, std::nullopt});
        continue;
      }
      if (piece.find('/', slash + 1) != std::string::npos || slash == 0 ||
          slash == piece.size() - 1) {
        result.errors.push_back(
            {line_number, std::string(line),
             "malformed token annotation: \"" + piece + "\""});
        bad = true;
        break;
      }
      phrase.tokens.push_back(
          {piece.substr(0, slash), piece.substr(slash + 1)});
    }
    if (bad || phrase.tokens.empty()) continue;

    for (size_t i = 0; i < phrase.tokens.size(); ++i) {
      if (i > 0) phrase.text += ' ';
      phrase.text += phrase.tokens[i].surface;
    }
    result.phrases.push_back(std::move(phrase));
  }
  return result;
}

std::vector<RawPhrase> filter_verb_phrases(
    std::span<const RawPhrase> phrases,
    const std::set<std::string>& verb_lexicon, const Lemmatizer& lemmatizer) {
  std::vector<RawPhrase> kept;
  for (const RawPhrase& phrase : phrases) {
    if (phrase.tokens.empty()) continue;
    const PhraseToken& head = phrase.tokens.front();
    if (head.pos.has_value()) {
      if (!head.pos->empty() && (head.pos->front() == 'V' ||
                                 head.pos->front() == 'v')) {
        kept.push_back(phrase);
      }
      continue;
    }
    if (verb_lexicon.count(lemmatizer.lemmatize(head.surface)) > 0) {
      kept.push_back(phrase);
    }
  }
  return kept;
}

EventKey normalize_event(const RawPhrase& phrase,
                         const Lemmatizer& lemmatizer) {
  EventKey key;
  key.verb_lemma = lemmatizer.lemmatize(to_lower(phrase.tokens.front().surface));
  size_t i = 1;
  // Leading articles do not distinguish events: "play the music" == "play music".
  for (; i < phrase.tokens.size(); ++i) {
    const std::string tok = to_lower(phrase.tokens[i].surface);
    if (tok != "a" && tok != "an" && tok != "the") break;
  }
  for (; i < phrase.tokens.size(); ++i) {
    key.object_tokens.push_back(to_lower(phrase.tokens[i].surface));
  }
  return key;
}

std::vector<Event> group_events(std::span<const RawPhrase> phrases,
                                const Lemmatizer& lemmatizer) {
  std::map<EventKey, Event> by_key;
  for (const RawPhrase& phrase : phrases) {
    EventKey key = normalize_event(phrase, lemmatizer);
    auto [it, inserted] = by_key.try_emplace(key);
    if (inserted) {
      it->second.id = event_id_for(key);
      it->second.verb_lemma = key.verb_lemma;
      it->second.object_tokens = key.object_tokens;
    }
    it->second.surface_forms.insert(phrase.text);
  }
  std::vector<Event> out;
  out.reserve(by_key.size());
  for (auto& [key, event] : by_key) out.push_back(std::move(event));
  return out;
}

std::set<std::string> load_verb_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingInputError("verb lexicon not found: " + path);
  std::set<std::string> lexicon;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    lexicon.insert(to_lower(sv));
  }
  return lexicon;
}

}  // namespace durvote
