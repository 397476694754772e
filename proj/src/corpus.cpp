#include "braidslice/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "braidslice/analyze.hpp"
#include "braidslice/braid.hpp"
#include "braidslice/invariants.hpp"
#include "braidslice/laurent.hpp"
#include "braidslice/surfaces.hpp"

namespace braidslice {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Lazily computed views of one corpus input.
class Subject {
 public:
  explicit Subject(const CorpusEntry& e) : entry_(e), parsed_(parse_input(e.input)) {
    if (const auto* p = std::get_if<BandPresentation>(&parsed_)) {
      presentation_ = *p;
      word_ = expand_presentation(*p);
    } else {
      word_ = std::get<BraidWord>(parsed_);
    }
  }

  const BraidWord& word() const { return word_; }
  const BandPresentation& presentation(const std::string& key) const {
    if (!presentation_)
      throw CorpusError("line " + std::to_string(entry_.line) + ": key '" + key +
                        "' needs a presentation input");
    return *presentation_;
  }
  const ConcordanceReport& report() {
    if (!report_) report_ = analyze_input(entry_.input, entry_.name);
    return *report_;
  }

 private:
  const CorpusEntry& entry_;
  std::variant<BraidWord, BandPresentation> parsed_;
  std::optional<BandPresentation> presentation_;
  BraidWord word_;
  std::optional<ConcordanceReport> report_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

using Evaluator = std::function<std::string(Subject&, const std::string& key)>;

const std::map<std::string, Evaluator>& evaluators() {
  static const std::map<std::string, Evaluator> table{
      {"strands", [](Subject& s, const std::string&) { return std::to_string(s.word().strands()); }},
      {"bands",
       [](Subject& s, const std::string& k) {
         return std::to_string(s.presentation(k).band_count());
       }},
      {"chi",
       [](Subject& s, const std::string& k) {
         return std::to_string(euler_characteristic(s.presentation(k)));
       }},
      {"exponent", [](Subject& s, const std::string&) { return std::to_string(exponent_sum(s.word())); }},
      {"components",
       [](Subject& s, const std::string&) { return std::to_string(component_count(s.word())); }},
      {"alexander",
       [](Subject& s, const std::string&) { return to_string(alexander_closure(s.word()).poly); }},
      {"component_alexander",
       [](Subject& s, const std::string&) {
         // Distinct per-component polynomials, joined by ';'.
         std::vector<std::string> seen;
         for (const auto& comp : closure_components(s.word())) {
           auto poly = to_string(alexander_closure(erase_strands(s.word(), comp)).poly);
           if (std::find(seen.begin(), seen.end(), poly) == seen.end()) seen.push_back(poly);
         }
         std::string out;
         for (const auto& p : seen) out += (out.empty() ? "" : ";") + p;
         return out;
       }},
      {"chi_s", [](Subject& s, const std::string&) { return std::to_string(s.report().chi_s->value); }},
      {"slice_genus",
       [](Subject& s, const std::string&) { return std::to_string(slice_genus_bound(s.word())); }},
      {"sqp",
       [](Subject& s, const std::string& k) {
         return yes_no(s.presentation(k).strongly_quasipositive());
       }},
      {"det", [](Subject& s, const std::string&) { return std::to_string(s.report().determinant); }},
      {"fox_milnor",
       [](Subject& s, const std::string&) -> std::string {
         const auto& fm = s.report().fox_milnor_silent;
         if (!fm) return "n/a";
         return *fm ? "silent" : "obstructs";
       }},
      {"verdict", [](Subject& s, const std::string&) { return std::string(to_string(s.report().slice)); }},
  };
  return table;
}

bool values_match(const std::string& key, const std::string& expected, const std::string& actual) {
  if (key == "alexander") return parse_laurent(expected) == parse_laurent(actual);
  if (key == "component_alexander") {
    auto split = [](const std::string& s) {
      std::vector<LaurentPoly> out;
      std::stringstream in(s);
      for (std::string part; std::getline(in, part, ';');) out.push_back(parse_laurent(part));
      return out;
    };
    const auto want = split(expected);
    const auto got = split(actual);
    // every component polynomial must appear among the expected ones and
    // vice versa
    auto covers = [](const auto& a, const auto& b) {
      return std::all_of(b.begin(), b.end(),
                         [&](const auto& x) { return std::find(a.begin(), a.end(), x) != a.end(); });
    };
    return covers(want, got) && covers(got, want);
  }
  return expected == actual;
}

}  // namespace

const std::vector<std::string>& corpus_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [k, _] : evaluators()) out.push_back(k);
    return out;
  }();
  return keys;
}

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::stringstream parts(line);
    for (std::string f; std::getline(parts, f, '|');) fields.push_back(trim(f));
    if (fields.size() == 2) fields.emplace_back();
    if (fields.size() != 3)
      throw CorpusError("line " + std::to_string(lineno) + ": expected 'name | input | key=value ...'");
    if (fields[0].empty() || fields[1].empty())
      throw CorpusError("line " + std::to_string(lineno) + ": empty name or input");

    CorpusEntry e{fields[0], fields[1], {}, lineno};
    std::istringstream kv(fields[2]);
    for (std::string tok; kv >> tok;) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
        throw CorpusError("line " + std::to_string(lineno) + ": malformed expectation '" + tok + "'");
      std::string key = tok.substr(0, eq);
      if (!evaluators().contains(key))
        throw CorpusError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      e.expectations.emplace_back(std::move(key), tok.substr(eq + 1));
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Mismatch> check_entry(const CorpusEntry& entry) {
  Subject subject(entry);
  std::vector<Mismatch> out;
  for (const auto& [key, expected] : entry.expectations) {
    const std::string actual = evaluators().at(key)(subject, key);
    if (!values_match(key, expected, actual)) out.push_back({entry.name, key, expected, actual});
  }
  return out;
}

}  // namespace braidslice
