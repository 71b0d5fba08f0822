// zww: generate finite ZWW / Fibonacci words, run factor censuses, verify the
// counting identities against brute-force scans, reproduce the summary
// tables, and benchmark the linear-time Lyndon array construction.
//
// Exit codes: 0 success / all identities verified, 1 verification mismatch or
// I/O failure, 2 usage error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zww/closed_forms.hpp"
#include "zww/factor_analysis.hpp"
#include "zww/lyndon_array.hpp"
#include "zww/serialize.hpp"
#include "zww/verify.hpp"
#include "zww/word_core.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    if (!std::cout) throw IoError("write to standard output failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << payload;
  if (!out) throw IoError("write to '" + path + "' failed");
}

zww::Word read_word_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string line;
  std::getline(in, line);
  if (in.bad()) throw IoError("read from '" + path + "' failed");
  return zww::word_from_text_line(line);
}

std::string digits_compact(const zww::Word& w) {
  // single-string rendering for the table of small words (letters <= 9 there)
  std::string s;
  for (zww::Letter a : w) s += std::to_string(a);
  return s;
}

std::int64_t median(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

template <typename Fn>
std::int64_t median_ns(Fn&& fn, int reps) {
  std::vector<std::int64_t> samples;
  samples.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  }
  return median(std::move(samples));
}

struct GenerateArgs {
  int k = 0;
  bool fibonacci = false;
  std::string format = "text";
  std::string out;
  std::int64_t max_length = zww::kDefaultMaxWordLength;
};

void require_text_or_json(const std::string& format) {
  if (format != "text" && format != "json")
    throw std::invalid_argument("format '" + format + "' is only valid for bench");
}

int cmd_generate(const GenerateArgs& a) {
  require_text_or_json(a.format);
  zww::Word w = a.fibonacci ? zww::fibonacci_word(a.k, a.max_length) : zww::zww_word(a.k, a.max_length);
  if (a.format == "json")
    write_output(a.out, zww::word_to_json(w, a.k).dump(2) + "\n");
  else
    write_output(a.out, zww::word_to_text(w));
  return kExitOk;
}

struct AnalyzeArgs {
  std::optional<int> k;
  std::string input;
  std::string what = "squares";
  bool witnesses = false;
  bool brute = false;
  std::string format = "text";
  std::string out;
  std::int64_t max_length = zww::kDefaultMaxWordLength;
};

std::string census_text(std::string_view what, const zww::CensusReport& r) {
  std::ostringstream os;
  os << "what: " << what << "\ntotal: " << r.total << "\ndistinct: " << r.distinct << '\n';
  if (r.witnesses_collected)
    for (const auto& w : r.witnesses) os << "witness: " << w[0] << ' ' << w[1] << '\n';
  return os.str();
}

int cmd_analyze(const AnalyzeArgs& a) {
  require_text_or_json(a.format);
  if (a.k.has_value() == !a.input.empty())
    throw std::invalid_argument("provide exactly one of --k and --input");
  zww::Word w = a.k ? zww::zww_word(*a.k, a.max_length) : read_word_file(a.input);
  const bool json = a.format == "json";
  std::string payload;

  if (a.what == "letters") {
    std::map<zww::Letter, std::int64_t> counts;
    for (zww::Letter c : w) ++counts[c];
    if (json) {
      nlohmann::json j;
      j["what"] = "letters";
      auto rows = nlohmann::json::array();
      for (const auto& [letter, count] : counts) rows.push_back({letter, count});
      j["counts"] = std::move(rows);
      payload = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "what: letters\n";
      for (const auto& [letter, count] : counts) os << letter << ' ' << count << '\n';
      payload = os.str();
    }
  } else if (a.what == "palindromes" || a.what == "squares") {
    zww::CensusReport r = a.what == "palindromes" ? zww::palindrome_census(w, a.witnesses)
                                                  : zww::square_census(w, a.witnesses);
    payload = json ? zww::census_to_json(a.what, r).dump(2) + "\n" : census_text(a.what, r);
  } else if (a.what == "runs") {
    auto runs = zww::run_census(w);
    if (json) {
      payload = zww::runs_to_json(runs).dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "what: runs\ntotal: " << runs.size() << '\n';
      for (const auto& r : runs)
        os << "run: start=" << r.start << " length=" << r.length << " period=" << r.period << '\n';
      payload = os.str();
    }
  } else if (a.what == "lyndon") {
    auto census = zww::lyndon_factor_census(w);
    std::int64_t distinct = 0;
    for (const auto& [letter, count] : census) distinct += count;
    std::int64_t total = w.empty() ? 0 : zww::lyndon_occurrence_count(w);
    if (json) {
      nlohmann::json j;
      j["what"] = "lyndon";
      j["distinct"] = distinct;
      j["total"] = total;
      nlohmann::json by_letter = nlohmann::json::object();
      for (const auto& [letter, count] : census) by_letter[std::to_string(letter)] = count;
      j["by_letter"] = std::move(by_letter);
      payload = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "what: lyndon\ndistinct: " << distinct << "\ntotal occurrences: " << total << '\n';
      for (const auto& [letter, count] : census) os << letter << ' ' << count << '\n';
      payload = os.str();
    }
  } else if (a.what == "lyndon-array") {
    zww::LyndonArray arr;
    if (a.k && !a.brute) {
      auto res = zww::algorithm_la(*a.k, /*materialize_word=*/true, a.max_length);
      arr = std::move(res.arr);
    } else {
      arr = zww::lyndon_array_bruteforce(w);
    }
    payload = json ? zww::lyndon_array_to_json(w, arr).dump(2) + "\n"
                   : zww::lyndon_array_to_text(w, arr);
  } else {
    throw std::invalid_argument("unknown census '" + a.what + "'");
  }

  write_output(a.out, payload);
  return kExitOk;
}

struct VerifyArgs {
  std::string selector = "all";
  int max_k = -1;
  std::string mutate;
  std::int64_t mutate_delta = -1;
  std::string format = "text";
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  require_text_or_json(a.format);
  zww::VerifyOptions opt = zww::with_max_index(a.selector, a.max_k);
  opt.mutate_formula = a.mutate;
  opt.mutate_delta = a.mutate_delta;
  auto outcomes = zww::run_verification(a.selector, opt);
  bool all_pass = std::all_of(outcomes.begin(), outcomes.end(),
                              [](const zww::VerificationOutcome& o) { return o.pass; });
  std::string payload = a.format == "json" ? zww::outcomes_to_json_text(outcomes)
                                           : zww::outcome_table(outcomes);
  write_output(a.out, payload);
  return all_pass ? kExitOk : kExitFailure;
}

struct TablesArgs {
  int which = 1;
  int n_max = 12;
  std::string format = "text";
  std::string out;
};

int cmd_tables(const TablesArgs& a) {
  require_text_or_json(a.format);
  std::ostringstream os;
  nlohmann::json rows = nlohmann::json::array();
  if (a.which == 1) {
    for (int i = 0; i <= 5; ++i) {
      zww::Word f = zww::fibonacci_word(i);
      zww::Word w = zww::zww_word(i);
      if (a.format == "json")
        rows.push_back({{"i", i}, {"F", digits_compact(f)}, {"W", digits_compact(w)}});
      else
        os << "F_" << i << "=" << digits_compact(f) << " / W_" << i << "=" << digits_compact(w)
           << '\n';
    }
  } else if (a.which == 2) {
    for (int n = 1; n <= a.n_max; ++n) {
      zww::CensusReport wc = zww::square_census(zww::zww_word(n));
      zww::CensusReport fc = zww::square_census(zww::fibonacci_word(n));
      std::int64_t w_dist = zww::distinct_square_count(n);
      std::int64_t w_tot = zww::total_squares(n);
      std::string f_dist = n >= 3 ? std::to_string(zww::fib_word_distinct_squares(n)) : "-";
      std::string f_tot = n >= 3 ? std::to_string(zww::fib_word_total_squares(n)) : "-";
      std::string note =
          n == 3 ? " (outside contract: formula " + f_dist + ", census " +
                       std::to_string(fc.distinct) + ")"
                 : "";
      if (a.format == "json") {
        nlohmann::json j = {{"n", n},
                            {"W", {{"distinct_formula", w_dist}, {"distinct_census", wc.distinct},
                                   {"total_formula", w_tot}, {"total_census", wc.total}}},
                            {"F", {{"distinct_formula", f_dist}, {"distinct_census", fc.distinct},
                                   {"total_formula", f_tot}, {"total_census", fc.total}}}};
        if (n == 3) j["note"] = "n=3 distinct outside contract";
        rows.push_back(std::move(j));
      } else {
        os << "n=" << n << "  W.distinct=" << w_dist << "/" << wc.distinct
           << "  W.total=" << w_tot << "/" << wc.total << "  F.distinct=" << f_dist << "/"
           << fc.distinct << note << "  F.total=" << f_tot << "/" << fc.total << '\n';
      }
    }
  } else {
    throw std::invalid_argument("tables selector must be 1 or 2");
  }
  write_output(a.out, a.format == "json" ? rows.dump(2) + "\n" : os.str());
  return kExitOk;
}

struct BenchArgs {
  int max_k = 20;
  int reps = 5;
  bool compare = false;
  std::string out;
  std::int64_t max_length = zww::kDefaultMaxWordLength;
};

int cmd_bench(const BenchArgs& a) {
  constexpr std::int64_t kBruteLengthCap = 5000;
  std::ostringstream os;
  os << "k,length,la_ns,brute_ns,reps\n";
  for (int k = 0; k <= a.max_k && k <= zww::kMaxWordIndex; ++k) {
    std::int64_t length = zww::fib(k + 2).value;
    if (length > a.max_length) break;
    std::int64_t la_ns = median_ns([&] { zww::algorithm_la(k, true, a.max_length); }, a.reps);
    std::string brute_ns;
    if (a.compare && length <= kBruteLengthCap) {
      zww::Word w = zww::zww_word(k, a.max_length);
      brute_ns = std::to_string(median_ns([&] { zww::lyndon_array_bruteforce(w); }, a.reps));
    }
    os << k << ',' << length << ',' << la_ns << ',' << brute_ns << ',' << a.reps << '\n';
  }
  write_output(a.out, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci word on an infinite alphabet: words, censuses, identities"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string global_out;
  std::string global_format = "text";
  std::int64_t global_max_length = zww::kDefaultMaxWordLength;
  app.add_option("--out", global_out, "write output to this path instead of stdout");
  app.add_option("--format", global_format, "output format: text, json, csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-length", global_max_length, "word length cap override");

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "emit W_k (or F_k) in text or json");
  c_gen->add_option("--k", gen.k, "word index")->required();
  c_gen->add_flag("--fibonacci", gen.fibonacci, "emit the binary Fibonacci word F_k");

  AnalyzeArgs an;
  auto* c_an = app.add_subcommand("analyze", "run a census on W_k or on a word from a file");
  c_an->add_option("--k", an.k, "word index");
  c_an->add_option("--input", an.input, "path to a word in word text format");
  c_an->add_option("--what", an.what,
                   "letters, palindromes, squares, runs, lyndon, lyndon-array")
      ->check(CLI::IsMember({"letters", "palindromes", "squares", "runs", "lyndon",
                             "lyndon-array"}));
  c_an->add_flag("--witnesses", an.witnesses, "include occurrence witnesses");
  c_an->add_flag("--brute", an.brute, "force the brute-force Lyndon array path");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "check the counting identities against censuses");
  c_ver->add_option("--selector", ver.selector, "identity group (default: all)")
      ->check(CLI::IsMember(zww::verification_selectors()));
  c_ver->add_option("--max-k", ver.max_k, "override the selected group's index range");
  c_ver->add_option("--mutate", ver.mutate,
                    "fault injection: perturb this formula and expect a failure")
      ->check(CLI::IsMember(zww::mutable_formulas()));
  c_ver->add_option("--mutate-delta", ver.mutate_delta, "perturbation amount (default -1)");

  TablesArgs tab;
  auto* c_tab = app.add_subcommand("tables", "reproduce the word/square summary tables");
  c_tab->add_option("--which", tab.which, "1: words listing, 2: square counts")->required();
  c_tab->add_option("--n-max", tab.n_max, "last row of table 2");

  BenchArgs ben;
  auto* c_ben = app.add_subcommand("bench", "time the Lyndon array construction, CSV output");
  c_ben->add_option("--max-k", ben.max_k, "largest word index");
  c_ben->add_option("--reps", ben.reps, "repetitions per k (median reported)")
      ->check(CLI::PositiveNumber);
  c_ben->add_flag("--compare", ben.compare, "also time the brute-force array on small words");

  AnalyzeArgs la;
  la.what = "lyndon-array";
  auto* c_la = app.add_subcommand("lyndon-array", "shortcut for analyze --what lyndon-array");
  c_la->add_option("--k", la.k, "word index");
  c_la->add_option("--input", la.input, "path to a word in word text format");
  c_la->add_flag("--brute", la.brute, "force the brute-force path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    gen.out = an.out = ver.out = tab.out = ben.out = la.out = global_out;
    gen.format = an.format = ver.format = tab.format = la.format = global_format;
    gen.max_length = an.max_length = ben.max_length = la.max_length = global_max_length;

    if (c_gen->parsed()) return cmd_generate(gen);
    if (c_an->parsed()) return cmd_analyze(an);
    if (c_ver->parsed()) return cmd_verify(ver);
    if (c_tab->parsed()) return cmd_tables(tab);
    if (c_ben->parsed()) return cmd_bench(ben);
    if (c_la->parsed()) return cmd_analyze(la);
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    // domain errors (bad index, cap exceeded, malformed input) are usage errors
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
