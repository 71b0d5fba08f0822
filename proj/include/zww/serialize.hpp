#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zww/factor_analysis.hpp"
#include "zww/lyndon_array.hpp"
#include "zww/word_core.hpp"

namespace zww {

// Word text format: letters as base-10 integers, single spaces between,
// one trailing newline, one word per line.
std::string word_to_text(const Word& w);

/// Parses one line of word text. Throws std::invalid_argument on empty
/// tokens, non-integer tokens, or negative letters.
Word word_from_text_line(std::string_view line);

/// {"k": <optional>, "length": n, "letters": [...]}
nlohmann::json word_to_json(const Word& w, std::optional<int> k = std::nullopt);

/// Validates the length field and letter signs on the way in.
Word word_from_json(const nlohmann::json& j);

/// {"what": ..., "distinct": n, "total": n, "witnesses": [[start, len_or_period], ...]}
/// The witnesses key is present only when the census collected them.
nlohmann::json census_to_json(std::string_view what, const CensusReport& r);

/// Runs carry three coordinates, so their witness rows are
/// [start, length, period] triples.
nlohmann::json runs_to_json(const std::vector<RunOccurrence>& runs);

/// Two lines: the word in word text format, then the ell values.
std::string lyndon_array_to_text(const Word& w, const LyndonArray& a);

nlohmann::json lyndon_array_to_json(const Word& w, const LyndonArray& a);

}  // namespace zww
