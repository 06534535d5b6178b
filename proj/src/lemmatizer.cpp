#include "durvote/lemmatizer.hpp"

#include <fstream>

#include "durvote/errors.hpp"
#include "durvote/text.hpp"

namespace durvote {

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Consonants that double before -ing/-ed ("running", "stopped").
// l/s/z/f are excluded: "telling", "passing", "buzzing" keep the pair.
bool doubles(char c) {
  switch (c) {
    case 'b':
    case 'd':
    case 'g':
    case 'k':
    case 'm':
    case 'n':
    case 'p':
    case 'r':
    case 't':
      return true;
    default:
      return false;
  }
}

int vowel_group_count(const std::string& s) {
  int groups = 0;
  bool in_group = false;
  for (char c : s) {
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  return groups;
}

// Repairs a stem left by stripping -ing/-ed.
std::string restore_stem(std::string stem) {
  const size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && doubles(stem[n - 1])) {
    stem.pop_back();  // runn -> run
    return stem;
  }
  const char last = stem.back();
  // English verb spelling wants a final e after v, soft c/g, and single z.
  if (last == 'v' || last == 'c' || last == 'g' || last == 'z') {
    stem.push_back('e');  // driv -> drive, danc -> dance, chang -> change
    return stem;
  }
  // Monosyllabic consonant-vowel-consonant stems take e (mak -> make,
  // us -> use) while polysyllabic ones do not (visit, open, offer).
  if (!is_vowel(last) && last != 'w' && last != 'x' && last != 'y' &&
      n >= 2 && is_vowel(stem[n - 2]) && vowel_group_count(stem) == 1) {
    stem.push_back('e');
  }
  return stem;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Lemmatizer Lemmatizer::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw MissingInputError("irregular verb table not found: " + path);
  }
  Lemmatizer lem;
  lem.load_irregulars(in);
  return lem;
}

void Lemmatizer::load_irregulars(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    const size_t tab = sv.find('\t');
    if (tab == std::string_view::npos) continue;
    add_irregular(to_lower(trim(sv.substr(0, tab))),
                  to_lower(trim(sv.substr(tab + 1))));
  }
}

void Lemmatizer::add_irregular(std::string inflected, std::string lemma) {
  irregulars_[std::move(inflected)] = std::move(lemma);
}

std::string Lemmatizer::lemmatize(std::string_view token) const {
  std::string word = to_lower(token);
  if (word.size() < 3) return word;

  if (auto it = irregulars_.find(word); it != irregulars_.end()) {
    return it->second;
  }

  if (ends_with(word, "ing") && word.size() >= 5) {
    if (ends_with(word, "eeing")) return word.substr(0, word.size() - 3);
    return restore_stem(word.substr(0, word.size() - 3));
  }
  if (ends_with(word, "ied") && word.size() >= 4) {
    return word.substr(0, word.size() - 3) + "y";  // studied -> study
  }
  if (ends_with(word, "eed") && word.size() >= 5) {
    return word.substr(0, word.size() - 1);  // agreed -> agree, freed -> free
  }
  if (ends_with(word, "ed") && word.size() >= 4) {
    return restore_stem(word.substr(0, word.size() - 2));
  }
  if (ends_with(word, "ies") && word.size() >= 5) {
    return word.substr(0, word.size() - 3) + "y";  // studies -> study
  }
  if (word.size() >= 4 &&
      (ends_with(word, "sses") || ends_with(word, "zzes") ||
       ends_with(word, "xes") || ends_with(word, "ches") ||
       ends_with(word, "shes") || ends_with(word, "oes"))) {
    return word.substr(0, word.size() - 2);  // passes -> pass, goes -> go
  }
  if (word.size() >= 4 && word.back() == 's' && !ends_with(word, "ss") &&
      !ends_with(word, "us") && !ends_with(word, "is")) {
    return word.substr(0, word.size() - 1);  // plays -> play, uses -> use
  }
  return word;
}

}  // namespace durvote
