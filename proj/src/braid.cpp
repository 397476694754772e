#include "braidslice/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidslice {

namespace {

void check_letter(Letter l, int strands) {
  if (l.sign != 1 && l.sign != -1)
    throw std::invalid_argument("letter sign must be +1 or -1");
  if (l.index < 1 || l.index > strands - 1)
    throw std::invalid_argument("generator index " + std::to_string(l.index) +
                                " out of range for B_" + std::to_string(strands));
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
  for (const auto& l : letters_) check_letter(l, strands_);
}

void BraidWord::push_back(Letter l) {
  check_letter(l, strands_);
  letters_.push_back(l);
}

void BraidWord::append(const BraidWord& other) {
  if (other.strands_ != strands_)
    throw std::invalid_argument("cannot concatenate braids on different strand counts");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::freely_reduced() const {
  std::vector<Letter> stack;
  stack.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(strands_, std::move(stack));
}

BraidWord BraidWord::rotated(std::size_t shift) const {
  if (letters_.empty()) return *this;
  auto out = letters_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
              out.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.append(b);
  return out;
}

bool is_embedded(const Band& b) { return std::holds_alternative<EmbeddedBand>(b); }

bool BandPresentation::strongly_quasipositive() const {
  return std::all_of(bands.begin(), bands.end(), is_embedded);
}

void validate_band(const Band& b, int strands) {
  if (const auto* e = std::get_if<EmbeddedBand>(&b)) {
    if (e->i < 1 || e->i >= e->j || e->j > strands)
      throw std::invalid_argument("embedded band b(" + std::to_string(e->i) + "," +
                                  std::to_string(e->j) + ") invalid in B_" +
                                  std::to_string(strands));
    return;
  }
  const auto& c = std::get<ConjugatedBand>(b);
  if (c.conjugator.strands() != strands)
    throw std::invalid_argument("conjugating word lives in a different braid group");
  check_letter({c.index, 1}, strands);
}

void validate(const BandPresentation& p) {
  if (p.strands < 1) throw std::invalid_argument("presentation needs at least one strand");
  for (const auto& b : p.bands) validate_band(b, p.strands);
}

// -- Permutation ------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("images do not form a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[static_cast<std::size_t>(images_[x] - 1)] = static_cast<int>(x + 1);
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation then(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size())
    throw std::invalid_argument("permutations of different degree");
  std::vector<int> out(static_cast<std::size_t>(first.size()));
  for (int x = 1; x <= first.size(); ++x) out[static_cast<std::size_t>(x - 1)] = second(first(x));
  return Permutation(std::move(out));
}

// -- text format ------------------------------------------------------------

namespace {

int parse_int(std::string_view s, std::string_view token) {
  int value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (!s.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw ParseError("malformed integer in token '" + std::string(token) + "'",
                     std::string(token));
  return value;
}

struct Header {
  char kind;
  int strands;
  std::vector<std::string> tokens;
};

Header split_header(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("missing header 'B<n>:' or 'S<n>:'", std::string(text.substr(0, 16)));
  std::string head;
  for (char c : text.substr(0, colon))
    if (!std::isspace(static_cast<unsigned char>(c))) head.push_back(c);
  if (head.size() < 2 || (head[0] != 'B' && head[0] != 'S'))
    throw ParseError("malformed header '" + head + ":'", head + ":");
  Header h{head[0], parse_int(std::string_view(head).substr(1), head + ":"), {}};
  if (h.strands < 1) throw ParseError("strand count must be positive", head + ":");
  std::istringstream in{std::string(text.substr(colon + 1))};
  for (std::string tok; in >> tok;) h.tokens.push_back(tok);
  return h;
}

// s<i> or s<i>^<e>; returns (index, exponent)
std::optional<std::pair<int, int>> parse_generator(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 's') return std::nullopt;
  auto caret = tok.find('^');
  std::string_view sv(tok);
  int index = parse_int(sv.substr(1, caret == std::string::npos ? std::string::npos : caret - 1),
                        tok);
  int exponent = 1;
  if (caret != std::string::npos) {
    exponent = parse_int(sv.substr(caret + 1), tok);
    if (exponent == 0) throw ParseError("zero exponent in token '" + tok + "'", tok);
  }
  return std::pair{index, exponent};
}

std::optional<EmbeddedBand> parse_band_token(const std::string& tok) {
  if (tok.size() < 6 || tok.rfind("b(", 0) != 0 || tok.back() != ')') return std::nullopt;
  std::string_view inner = std::string_view(tok).substr(2, tok.size() - 3);
  auto comma = inner.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("band token needs two indices: '" + tok + "'", tok);
  return EmbeddedBand{parse_int(inner.substr(0, comma), tok), parse_int(inner.substr(comma + 1), tok)};
}

void check_index(int index, int strands, const std::string& tok) {
  if (index < 1 || index > strands - 1)
    throw ParseError("index out of range for " + std::to_string(strands) + " strands in token '" +
                         tok + "'",
                     tok);
}

BraidWord word_from(const Header& h) {
  BraidWord w(h.strands);
  for (const auto& tok : h.tokens) {
    if (tok.rfind("b(", 0) == 0)
      throw ParseError("band token '" + tok + "' is only legal in a presentation", tok);
    auto gen = parse_generator(tok);
    if (!gen) throw ParseError("unrecognized token '" + tok + "'", tok);
    check_index(gen->first, h.strands, tok);
    const int sign = gen->second > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(gen->second); ++k) w.push_back({gen->first, sign});
  }
  return w;
}

BandPresentation presentation_from(const Header& h) {
  BandPresentation p{h.strands, {}};
  for (const auto& tok : h.tokens) {
    if (auto band = parse_band_token(tok)) {
      if (band->i < 1 || band->i >= band->j || band->j > h.strands)
        throw ParseError("band indices out of range in token '" + tok + "'", tok);
      p.bands.emplace_back(*band);
      continue;
    }
    auto gen = parse_generator(tok);
    if (!gen) throw ParseError("unrecognized token '" + tok + "'", tok);
    check_index(gen->first, h.strands, tok);
    if (gen->second < 0)
      throw ParseError("negative generator '" + tok + "' is not a positive band", tok);
    for (int k = 0; k < gen->second; ++k) p.bands.emplace_back(EmbeddedBand{gen->first, gen->first + 1});
  }
  return p;
}

}  // namespace

BraidWord parse_word(std::string_view text) {
  Header h = split_header(text);
  if (h.kind != 'B') throw ParseError("expected a word header 'B<n>:'", std::string(1, h.kind));
  return word_from(h);
}

BandPresentation parse_presentation(std::string_view text) {
  Header h = split_header(text);
  if (h.kind != 'S')
    throw ParseError("expected a presentation header 'S<n>:'", std::string(1, h.kind));
  return presentation_from(h);
}

std::variant<BraidWord, BandPresentation> parse_input(std::string_view text) {
  Header h = split_header(text);
  if (h.kind == 'B') return word_from(h);
  return presentation_from(h);
}

std::string render_word(const BraidWord& w) {
  std::string out = "B" + std::to_string(w.strands()) + ":";
  for (const auto& l : w.letters()) {
    out += " s" + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string render_presentation(const BandPresentation& p) {
  std::string out = "S" + std::to_string(p.strands) + ":";
  for (const auto& b : p.bands) {
    const auto* e = std::get_if<EmbeddedBand>(&b);
    if (!e) throw std::invalid_argument("conjugated bands have no text form");
    if (e->j == e->i + 1)
      out += " s" + std::to_string(e->i);
    else
      out += " b(" + std::to_string(e->i) + "," + std::to_string(e->j) + ")";
  }
  return out;
}

// -- operations -------------------------------------------------------------

BraidWord expand_band(const Band& b, int strands) {
  validate_band(b, strands);
  if (const auto* e = std::get_if<EmbeddedBand>(&b)) {
    // (s_i ... s_{j-2}) s_{j-1} (s_i ... s_{j-2})^{-1}
    BraidWord prefix(strands);
    for (int k = e->i; k <= e->j - 2; ++k) prefix.push_back({k, 1});
    BraidWord core(strands, {{e->j - 1, 1}});
    return prefix * core * prefix.inverse();
  }
  const auto& c = std::get<ConjugatedBand>(b);
  return c.conjugator * BraidWord(strands, {{c.index, 1}}) * c.conjugator.inverse();
}

BraidWord expand_presentation(const BandPresentation& p) {
  validate(p);
  BraidWord out(p.strands);
  for (const auto& b : p.bands) out.append(expand_band(b, p.strands));
  return out.freely_reduced();
}

int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (const auto& l : w.letters()) e += l.sign;
  return e;
}

Permutation underlying_permutation(const BraidWord& w) {
  // occupant[pos] = top position of the strand currently at pos
  std::vector<int> occupant(static_cast<std::size_t>(w.strands()));
  std::iota(occupant.begin(), occupant.end(), 1);
  for (const auto& l : w.letters())
    std::swap(occupant[static_cast<std::size_t>(l.index - 1)],
              occupant[static_cast<std::size_t>(l.index)]);
  std::vector<int> images(occupant.size());
  for (std::size_t pos = 0; pos < occupant.size(); ++pos)
    images[static_cast<std::size_t>(occupant[pos] - 1)] = static_cast<int>(pos + 1);
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> closure_components(const BraidWord& w) {
  return underlying_permutation(w).cycles();
}

int component_count(const BraidWord& w) {
  return static_cast<int>(closure_components(w).size());
}

bool closure_is_knot(const BraidWord& w) { return component_count(w) == 1; }

BraidWord erase_strands(const BraidWord& w, std::span<const int> keep) {
  const int n = w.strands();
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int x : keep) {
    if (x < 1 || x > n) throw std::invalid_argument("strand " + std::to_string(x) + " out of range");
    kept[static_cast<std::size_t>(x - 1)] = true;
  }
  for (const auto& cycle : closure_components(w)) {
    const bool first = kept[static_cast<std::size_t>(cycle.front() - 1)];
    for (int x : cycle)
      if (kept[static_cast<std::size_t>(x - 1)] != first)
        throw std::invalid_argument("strand set splits a closure component");
  }
  const int m = static_cast<int>(std::count(kept.begin(), kept.end(), true));
  if (m == 0) throw std::invalid_argument("cannot erase every strand");

  std::vector<int> occupant(static_cast<std::size_t>(n));
  std::iota(occupant.begin(), occupant.end(), 1);
  auto is_kept = [&](int strand) { return kept[static_cast<std::size_t>(strand - 1)]; };
  BraidWord out(m);
  for (const auto& l : w.letters()) {
    const auto lo = static_cast<std::size_t>(l.index - 1);
    if (is_kept(occupant[lo]) && is_kept(occupant[lo + 1])) {
      int rank = 0;
      for (std::size_t pos = 0; pos <= lo; ++pos)
        if (is_kept(occupant[pos])) ++rank;
      out.push_back({rank, l.sign});
    }
    std::swap(occupant[lo], occupant[lo + 1]);
  }
  return out;
}

namespace {

std::vector<int> involution_from(const Matching& m, int n) {
  std::vector<int> partner(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : m) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      throw std::invalid_argument("matching pair out of range");
    auto& pa = partner[static_cast<std::size_t>(a - 1)];
    auto& pb = partner[static_cast<std::size_t>(b - 1)];
    if (pa != 0 || pb != 0) throw std::invalid_argument("matching uses a point twice");
    pa = b;
    pb = a;
  }
  if (std::find(partner.begin(), partner.end(), 0) != partner.end())
    throw std::invalid_argument("matching is not perfect");
  return partner;
}

}  // namespace

int plat_components(const BraidWord& w, const Matching& top, const Matching& bottom) {
  const int n = w.strands();
  if (n % 2 != 0) throw std::invalid_argument("plat closure needs an even strand count");
  const auto cap = involution_from(top, n);
  const auto cup = involution_from(bottom, n);
  const Permutation down = underlying_permutation(w);
  const Permutation up = down.inverse();

  // Each loop alternates: down a strand, across a cup, up a strand, across a cap.
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int loops = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    ++loops;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)];) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      const int back = up(cup[static_cast<std::size_t>(down(x) - 1)]);
      seen[static_cast<std::size_t>(back - 1)] = true;
      x = cap[static_cast<std::size_t>(back - 1)];
    }
  }
  return loops;
}

BraidWord torus_braid(int p, int q) {
  if (p < 1) throw std::invalid_argument("torus braid needs p >= 1");
  BraidWord cycle(p);
  for (int i = 1; i < p; ++i) cycle.push_back({i, 1});
  const BraidWord unit = q >= 0 ? cycle : cycle.inverse();
  BraidWord out(p);
  for (int k = 0; k < std::abs(q); ++k) out.append(unit);
  return out;
}

}  // namespace braidslice
