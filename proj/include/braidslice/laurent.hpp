#pragma once

// Exact integer Laurent polynomials in one variable t.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace braidslice {

using Coeff = std::int64_t;

/// Element of Z[t, t^-1]. Stores only nonzero coefficients; the empty map is
/// zero. All arithmetic is checked and throws std::overflow_error rather than
/// wrapping.
class LaurentPoly {
 public:
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT: implicit integer embedding
  LaurentPoly(std::initializer_list<std::pair<const int, Coeff>> terms);

  static LaurentPoly monomial(Coeff c, int exponent);
  static LaurentPoly t() { return monomial(1, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  /// Requires nonzero.
  int min_exponent() const;
  int max_exponent() const;
  Coeff leading_coeff() const { return coeff(max_exponent()); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  /// p(t) -> p(t^-1)
  LaurentPoly substitute_inverse() const;
  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  Coeff evaluate(Coeff x) const;  // x = 0 requires no negative exponents

  bool is_symmetric() const { return substitute_inverse() == *this; }

  /// Exact quotient, or nullopt when `divisor` does not divide *this in
  /// Z[t, t^-1]. Divisor must be nonzero.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int exponent, Coeff c);
  Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

/// True when a = +-t^k * b for some k.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

/// Text form: terms like `3*t^-2`, `t`, `-t^4`, `5`, joined by `+`/`-`,
/// whitespace optional. Ascending exponents on output, e.g. `t^-1 - 1 + t`.
std::string to_string(const LaurentPoly& p);
LaurentPoly parse_laurent(std::string_view text);

namespace checked {
Coeff add(Coeff a, Coeff b);
Coeff mul(Coeff a, Coeff b);
}  // namespace checked

}  // namespace braidslice
