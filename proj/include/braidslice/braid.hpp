#pragma once

// Braid words, positive bands and the closure/plat bookkeeping built on the
// underlying permutation of a braid.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace braidslice {

/// Raised for malformed braid/presentation text. `token()` is the offending
/// token, verbatim.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string token)
      : std::runtime_error(what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// A single generator sigma_index^sign.
struct Letter {
  int index = 1;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the standard generators of B_n. Equality is literal; use
/// `freely_reduced()` to compare up to free reduction.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(Letter l);
  void append(const BraidWord& other);

  BraidWord inverse() const;
  BraidWord freely_reduced() const;
  /// Cyclic rotation: moves the first `shift` letters to the end.
  BraidWord rotated(std::size_t shift) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

BraidWord operator*(const BraidWord& a, const BraidWord& b);

/// sigma_{i,j}: the positive embedded band joining strands i < j, passing
/// in front of the strands strictly between them.
struct EmbeddedBand {
  int i = 1;
  int j = 2;
  friend bool operator==(const EmbeddedBand&, const EmbeddedBand&) = default;
};

/// w sigma_i w^{-1}
struct ConjugatedBand {
  BraidWord conjugator;
  int index = 1;
  friend bool operator==(const ConjugatedBand&, const ConjugatedBand&) = default;
};

using Band = std::variant<EmbeddedBand, ConjugatedBand>;

bool is_embedded(const Band& b);

/// Ordered bands on `strands` disks; describes the braided surface
/// S(b_1, ..., b_k).
struct BandPresentation {
  int strands = 1;
  std::vector<Band> bands;

  std::size_t band_count() const noexcept { return bands.size(); }
  /// True when every band is an embedded band sigma_{i,j}.
  bool strongly_quasipositive() const;
  friend bool operator==(const BandPresentation&, const BandPresentation&) = default;
};

/// Throws std::invalid_argument if the band does not live in B_n.
void validate_band(const Band& b, int strands);
void validate(const BandPresentation& p);

/// One-line permutation on {1..n}; images[x-1] = pi(x).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  /// Disjoint cycles, each starting at its least element, ordered by that
  /// element. Fixed points are included as 1-cycles.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// `first` acts, then `second`.
Permutation then(const Permutation& first, const Permutation& second);

// -- text format ------------------------------------------------------------

BraidWord parse_word(std::string_view text);
BandPresentation parse_presentation(std::string_view text);
/// Dispatches on the header: `B<n>:` yields a word, `S<n>:` a presentation.
std::variant<BraidWord, BandPresentation> parse_input(std::string_view text);

std::string render_word(const BraidWord& w);
/// Only embedded bands have a text form; conjugated bands throw.
std::string render_presentation(const BandPresentation& p);

// -- operations -------------------------------------------------------------

BraidWord expand_band(const Band& b, int strands);
BraidWord expand_presentation(const BandPresentation& p);
int exponent_sum(const BraidWord& w);

/// sigma_i^{+-1} -> transposition (i i+1), leftmost letter acting first:
/// the result sends a strand's top position to its bottom position.
Permutation underlying_permutation(const BraidWord& w);

/// Strand sets of the components of the closed braid.
std::vector<std::vector<int>> closure_components(const BraidWord& w);
int component_count(const BraidWord& w);
bool closure_is_knot(const BraidWord& w);

/// Braid on |keep| strands whose closure is the sublink through the kept
/// top positions. Throws std::invalid_argument if `keep` splits a component.
BraidWord erase_strands(const BraidWord& w, std::span<const int> keep);

using Matching = std::vector<std::pair<int, int>>;

/// Components of the plat closure of w with the given cap (top) and cup
/// (bottom) matchings.
int plat_components(const BraidWord& w, const Matching& top, const Matching& bottom);

/// (sigma_1 ... sigma_{p-1})^q in B_p.
BraidWord torus_braid(int p, int q);

}  // namespace braidslice
