#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>

namespace durvote {

/// Rule-based English verb lemmatizer: an irregular-form exception table
/// plus -ing/-ed/-s suffix stripping with undoubling and e-restoration.
/// lemmatize() is a pure function of the token for a fixed table.
class Lemmatizer {
 public:
  Lemmatizer() = default;

  /// Loads "inflected<TAB>lemma" lines; '#' lines and blanks are skipped.
  static Lemmatizer from_file(const std::string& path);

  void load_irregulars(std::istream& in);
  void add_irregular(std::string inflected, std::string lemma);

  std::string lemmatize(std::string_view token) const;

  size_t irregular_count() const { return irregulars_.size(); }

 private:
  std::unordered_map<std::string, std::string> irregulars_;
};

}  // namespace durvote
