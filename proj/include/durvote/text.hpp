#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace durvote {

std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

/// Splits on whitespace runs; no empty pieces.
std::vector<std::string> split_whitespace(std::string_view s);

/// Matching tokenization shared by corpus matching and the pattern
/// predictor: whitespace split, leading/trailing non-alphanumerics stripped,
/// lowercased; tokens that strip to nothing are dropped.
std::vector<std::string> tokenize_lower(std::string_view s);

/// Collapses every whitespace run to a single space and trims the ends.
std::string normalize_whitespace(std::string_view s);

}  // namespace durvote
