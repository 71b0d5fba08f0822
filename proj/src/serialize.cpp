#include "zww/serialize.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace zww {

namespace {

std::string join_int64(const std::vector<std::int64_t>& vals) {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(vals[i]);
  }
  return out;
}

}  // namespace

std::string word_to_text(const Word& w) {
  std::string out;
  for (std::int64_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  out.push_back('\n');
  return out;
}

Word word_from_text_line(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<Letter> letters;
  if (line.empty()) return Word{};
  std::size_t pos = 0;
  while (true) {
    std::size_t space = line.find(' ', pos);
    std::string_view token = line.substr(pos, space == std::string_view::npos ? space : space - pos);
    if (token.empty()) throw std::invalid_argument("word text: empty token (check spacing)");
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("word text: non-integer token '" + std::string(token) + "'");
    if (value < 0) throw std::invalid_argument("word text: negative letter " + std::to_string(value));
    letters.push_back(value);
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return word_unchecked(std::move(letters));
}

nlohmann::json word_to_json(const Word& w, std::optional<int> k) {
  nlohmann::json j;
  if (k) j["k"] = *k;
  j["length"] = w.size();
  j["letters"] = w.letters();
  return j;
}

Word word_from_json(const nlohmann::json& j) {
  if (!j.contains("letters") || !j["letters"].is_array())
    throw std::invalid_argument("word json: missing letters array");
  std::vector<Letter> letters;
  for (const auto& v : j["letters"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("word json: non-integer letter");
    std::int64_t value = v.get<std::int64_t>();
    if (value < 0 || value > std::numeric_limits<Letter>::max())
      throw std::invalid_argument("word json: letter out of range");
    letters.push_back(static_cast<Letter>(value));
  }
  if (j.contains("length") && j["length"].get<std::int64_t>() != static_cast<std::int64_t>(letters.size()))
    throw std::invalid_argument("word json: length field disagrees with letters");
  return word_unchecked(std::move(letters));
}

nlohmann::json census_to_json(std::string_view what, const CensusReport& r) {
  nlohmann::json j;
  j["what"] = what;
  j["distinct"] = r.distinct;
  j["total"] = r.total;
  if (r.witnesses_collected) {
    auto rows = nlohmann::json::array();
    for (const auto& wit : r.witnesses) rows.push_back({wit[0], wit[1]});
    j["witnesses"] = std::move(rows);
  }
  return j;
}

nlohmann::json runs_to_json(const std::vector<RunOccurrence>& runs) {
  nlohmann::json j;
  j["what"] = "runs";
  j["distinct"] = runs.size();
  j["total"] = runs.size();
  auto rows = nlohmann::json::array();
  for (const auto& r : runs) rows.push_back({r.start, r.length, r.period});
  j["witnesses"] = std::move(rows);
  return j;
}

std::string lyndon_array_to_text(const Word& w, const LyndonArray& a) {
  return word_to_text(w) + join_int64(a.ell) + "\n";
}

nlohmann::json lyndon_array_to_json(const Word& w, const LyndonArray& a) {
  nlohmann::json j;
  j["what"] = "lyndon-array";
  j["word"] = w.letters();
  j["ell"] = a.ell;
  j["lambda"] = a.lambda;
  return j;
}

}  // namespace zww
