#pragma once

// Expectation corpus: one entry per line,
//
//   name | input | key=value key=value ...
//
// `#` starts a comment, blank lines are skipped. `input` is a braid word
// (`B<n>: ...`) or a presentation (`S<n>: ...`).
//
// Keys:
//   strands, bands, chi        surface data (bands and chi need a presentation)
//   exponent, components       exponent sum and closure component count
//   alexander                  Delta of the closure, e.g. t^-1-1+t
//   component_alexander        Delta of every closure component, via erase_strands
//   chi_s                      exact value or Bennequin bound
//   slice_genus                4-genus lower bound (knots)
//   sqp                        yes|no, all bands embedded
//   det                        |Delta(-1)|
//   fox_milnor                 silent|obstructs
//   verdict                    Slice|NotSlice|Unknown

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidslice {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusEntry {
  std::string name;
  std::string input;
  std::vector<std::pair<std::string, std::string>> expectations;
  int line = 0;
};

const std::vector<std::string>& corpus_keys();

/// Throws CorpusError naming the line on malformed entries or unknown keys.
std::vector<CorpusEntry> parse_corpus(std::string_view text);

struct Mismatch {
  std::string entry;
  std::string key;
  std::string expected;
  std::string actual;
};

/// Evaluates every expectation of `entry`. Throws CorpusError (or a parse
/// error) when the input is malformed or a key does not apply to it.
std::vector<Mismatch> check_entry(const CorpusEntry& entry);

}  // namespace braidslice
