#include "braidslice/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace braidslice {

namespace checked {

Coeff add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

Coeff mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace checked

LaurentPoly::LaurentPoly(Coeff constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Coeff>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, checked::mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, checked::mul(c1, c2));
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, checked::mul(c, -1));
  return out;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Coeff LaurentPoly::evaluate(Coeff x) const {
  if (is_zero()) return 0;
  if (x == 1 || x == -1) {
    Coeff acc = 0;
    for (const auto& [e, c] : terms_) acc = checked::add(acc, (x == -1 && e % 2 != 0) ? -c : c);
    return acc;
  }
  if (min_exponent() < 0)
    throw std::domain_error("negative powers only evaluate exactly at +-1");
  Coeff acc = 0;
  for (int e = max_exponent(); e >= 0; --e) acc = checked::add(checked::mul(acc, x), coeff(e));
  return acc;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const int d_top = divisor.max_exponent();
  const int d_span = d_top - divisor.min_exponent();
  const Coeff lead = divisor.leading_coeff();
  LaurentPoly rem = *this;
  LaurentPoly quotient;
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < d_span) return std::nullopt;
    const Coeff top = rem.leading_coeff();
    if (top % lead != 0) return std::nullopt;
    const LaurentPoly step = monomial(top / lead, rem.max_exponent() - d_top);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly out(1);
  for (unsigned k = 0; k < exponent; ++k) out *= base;
  return out;
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const LaurentPoly shifted = b.shifted(a.min_exponent() - b.min_exponent());
  return shifted == a || -shifted == a;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    // |c| without negating INT64_MIN
    const std::string magnitude = negative ? std::to_string(c).substr(1) : std::to_string(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += magnitude;
      continue;
    }
    if (magnitude != "1") out += magnitude + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

[[noreturn]] void bad(std::string_view text, std::size_t pos) {
  throw std::invalid_argument("malformed Laurent polynomial '" + std::string(text) +
                              "' at offset " + std::to_string(pos));
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) bad(text, 0);

  auto read_digits = [&](std::size_t& i) -> std::optional<Coeff> {
    const std::size_t start = i;
    Coeff v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = checked::add(checked::mul(v, 10), s[i++] - '0');
    if (i == start) return std::nullopt;
    return v;
  };

  LaurentPoly out;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    Coeff sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      bad(text, i);
    }
    first = false;
    auto coeff = read_digits(i);
    int exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (!coeff) bad(text, i);
      ++i;
      if (i >= s.size() || s[i] != 't') bad(text, i);
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) esign = s[i++] == '-' ? -1 : 1;
        auto e = read_digits(i);
        if (!e) bad(text, i);
        exponent = esign * static_cast<int>(*e);
      }
      if (!coeff) coeff = 1;
    }
    if (!coeff) bad(text, i);
    out += LaurentPoly::monomial(checked::mul(sign, *coeff), exponent);
  }
  return out;
}

}  // namespace braidslice
