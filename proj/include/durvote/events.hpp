#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "durvote/lemmatizer.hpp"

namespace durvote {

struct PhraseToken {
  std::string surface;
  std::optional<std::string> pos;
};

/// One phrase from the inventory file, e.g. "playing music" or
/// "play/VB music/NN".
struct RawPhrase {
  std::string text;  // surfaces joined by single spaces
  std::vector<PhraseToken> tokens;
};

struct PhraseParseError {
  int line_number = 0;  // 1-based
  std::string line;
  std::string message;
};

struct PhraseParseResult {
  std::vector<RawPhrase> phrases;
  std::vector<PhraseParseError> errors;
};

/// Normalized (verb lemma, object tokens) grouping key.
struct EventKey {
  std::string verb_lemma;
  std::vector<std::string> object_tokens;

  auto operator<=>(const EventKey&) const = default;
};

struct Event {
  std::string id;  // lowercase key joined by '_', e.g. "play_music"
  std::string verb_lemma;
  std::vector<std::string> object_tokens;
  std::set<std::string> surface_forms;

  /// Canonical rendering used by the question template: "play music".
  std::string surface() const;
};

std::string event_id_for(const EventKey& key);

/// One RawPhrase per non-empty, non-comment line; exact duplicate lines are
/// dropped keeping the first occurrence. A token with more than one '/'
/// (or an empty side) rejects the whole line as a recoverable error.
PhraseParseResult parse_phrase_list(std::span<const std::string> lines);

/// Keeps a phrase iff its first token is a verb: by POS tag when one is
/// present, otherwise by verb-lexicon membership of the lemmatized token.
std::vector<RawPhrase> filter_verb_phrases(
    std::span<const RawPhrase> phrases,
    const std::set<std::string>& verb_lexicon, const Lemmatizer& lemmatizer);

/// Lemmatizes the verb, lowercases the object, strips leading articles.
EventKey normalize_event(const RawPhrase& phrase, const Lemmatizer& lemmatizer);

/// One Event per distinct normalized key, sorted by key; surface_forms is
/// the union of contributing phrase texts.
std::vector<Event> group_events(std::span<const RawPhrase> phrases,
                                const Lemmatizer& lemmatizer);

/// Loads a one-lemma-per-line lexicon file ('#' comments, blanks skipped).
std::set<std::string> load_verb_lexicon(const std::string& path);

}  // namespace durvote
