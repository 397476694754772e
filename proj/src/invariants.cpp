#include "braidslice/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidslice {

// -- LaurentMatrix ----------------------------------------------------------

LaurentMatrix::LaurentMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {}

LaurentMatrix LaurentMatrix::identity(std::size_t dim) {
  LaurentMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  LaurentMatrix out(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < out.cells_.size(); ++i) out.cells_[i] -= b.cells_[i];
  return out;
}

LaurentPoly LaurentMatrix::determinant() const {
  const std::size_t n = dim_;
  if (n == 0) return 1;
  LaurentMatrix m = *this;
  LaurentPoly previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly numer = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = numer.divide_exact(previous);
        // Sylvester's identity guarantees exactness.
        if (!q) throw std::logic_error("Bareiss step was not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = LaurentPoly{};
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

// -- Burau ------------------------------------------------------------------

LaurentMatrix reduced_burau_generator(int strands, Letter l) {
  if (strands < 2) throw std::invalid_argument("reduced Burau needs at least 2 strands");
  if (l.index < 1 || l.index > strands - 1) throw std::invalid_argument("generator out of range");
  const auto dim = static_cast<std::size_t>(strands - 1);
  const auto k = static_cast<std::size_t>(l.index - 1);
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);
  LaurentMatrix g = LaurentMatrix::identity(dim);
  if (l.sign > 0) {
    g(k, k) = -t;
    if (k > 0) g(k - 1, k) = t;
    if (k + 1 < dim) g(k + 1, k) = 1;
  } else {
    g(k, k) = -t_inv;
    if (k > 0) g(k - 1, k) = 1;
    if (k + 1 < dim) g(k + 1, k) = t_inv;
  }
  return g;
}

LaurentMatrix reduced_burau(const BraidWord& w) {
  const int n = w.strands();
  if (n < 2) throw std::invalid_argument("reduced Burau needs at least 2 strands");
  const auto dim = static_cast<std::size_t>(n - 1);
  LaurentMatrix m = LaurentMatrix::identity(dim);
  // A generator matrix differs from I only in column k, so M * G rewrites
  // that one column.
  for (const auto& l : w.letters()) {
    const LaurentMatrix g = reduced_burau_generator(n, l);
    const auto k = static_cast<std::size_t>(l.index - 1);
    for (std::size_t r = 0; r < dim; ++r) {
      LaurentPoly cell = m(r, k) * g(k, k);
      if (k > 0) cell += m(r, k - 1) * g(k - 1, k);
      if (k + 1 < dim) cell += m(r, k + 1) * g(k + 1, k);
      m(r, k) = std::move(cell);
    }
  }
  return m;
}

// -- Alexander polynomials --------------------------------------------------

AlexanderForm normalize_alexander(const LaurentPoly& poly, bool knot) {
  if (!knot) {
    if (poly.is_zero()) return {poly, false};
    LaurentPoly p = poly.shifted(-poly.min_exponent());
    if (p.leading_coeff() < 0) p = -p;
    return {p, false};
  }
  if (poly.is_zero()) throw DegenerateDivision("knot Alexander polynomial vanished");
  LaurentPoly p = poly;
  const Coeff at_one = p.evaluate(1);
  if (at_one == -1)
    p = -p;
  else if (at_one != 1)
    throw DegenerateDivision("knot Alexander polynomial has |value at 1| != 1: " + to_string(poly));
  const int span = p.max_exponent() - p.min_exponent();
  if (span % 2 != 0) throw DegenerateDivision("knot Alexander polynomial has odd span");
  p = p.shifted(-p.min_exponent() - span / 2);
  if (!p.is_symmetric()) throw DegenerateDivision("knot Alexander polynomial is not symmetric");
  return {p, true};
}

AlexanderForm alexander_closure(const BraidWord& w) {
  const int n = w.strands();
  if (n == 1) return {LaurentPoly(1), true};
  const LaurentMatrix m = reduced_burau(w);
  const LaurentPoly det = (LaurentMatrix::identity(m.dim()) - m).determinant();
  LaurentPoly divisor;
  for (int e = 0; e < n; ++e) divisor += LaurentPoly::monomial(1, e);
  auto quotient = det.divide_exact(divisor);
  if (!quotient)
    throw DegenerateDivision("Burau determinant " + to_string(det) + " is not divisible by " +
                             to_string(divisor));
  return normalize_alexander(*quotient, closure_is_knot(w));
}

// -- genus-1 Seifert toolkit ------------------------------------------------

SeifertMatrix2 seifert_matrix_double(Coeff tau, DoubleSign sign) {
  return {tau, 1, 0, sign == DoubleSign::Positive ? -1 : 1};
}

AlexanderForm alexander_from_seifert2(const SeifertMatrix2& v) {
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly tv_a = t * v.a - v.a;
  const LaurentPoly tv_b = t * v.b - v.c;
  const LaurentPoly tv_c = t * v.c - v.b;
  const LaurentPoly tv_d = t * v.d - v.d;
  const LaurentPoly det = tv_a * tv_d - tv_b * tv_c;
  const Coeff at_one = det.evaluate(1);
  if (at_one == 0) throw std::domain_error("Seifert matrix with det(V - V^T) = 0 is not a knot pairing");
  return normalize_alexander(det, at_one == 1 || at_one == -1);
}

Coeff determinant_invariant(const AlexanderForm& a) {
  const Coeff v = a.poly.evaluate(-1);
  return v < 0 ? checked::mul(v, -1) : v;
}

bool is_perfect_square(Coeff n) {
  if (n < 0) return false;
  auto r = static_cast<Coeff>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

bool fox_milnor_necessary(const AlexanderForm& a) {
  return is_perfect_square(determinant_invariant(a));
}

int signature2(const SeifertMatrix2& v) {
  // V + V^T = [[2a, b+c], [b+c, 2d]]
  const Coeff off = checked::add(v.b, v.c);
  const Coeff det = checked::add(checked::mul(4, checked::mul(v.a, v.d)), -checked::mul(off, off));
  const Coeff trace = checked::add(v.a, v.d);
  if (det > 0) return trace > 0 ? 2 : -2;
  if (det < 0) return 0;
  return trace > 0 ? 1 : (trace < 0 ? -1 : 0);
}

bool genus1_a_slice(const SeifertMatrix2& v) {
  const Coeff off = checked::add(v.b, v.c);
  const Coeff disc = checked::add(checked::mul(off, off), -checked::mul(4, checked::mul(v.a, v.d)));
  return is_perfect_square(disc);
}

// -- Fox-Milnor factor search -----------------------------------------------

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr Coeff kMaxSampleMagnitude = 1'000'000'000'000;

std::vector<Coeff> positive_divisors(Coeff v) {
  v = v < 0 ? -v : v;
  std::vector<Coeff> small, large;
  for (Coeff d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d != v / d) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

struct Sample {
  Coeff x;
  std::vector<Coeff> divisors;
};

// Newton interpolation through (x_j, y_j); returns integer coefficients
// c_0..c_m of the interpolant, or nullopt if any is non-integral.
std::optional<std::vector<Coeff>> interpolate(const std::vector<Coeff>& xs,
                                              const std::vector<Coeff>& ys) {
  const std::size_t m = xs.size();
  std::vector<cpp_rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t j = m - 1; j >= level; --j) {
      dd[j] = (dd[j] - dd[j - 1]) / cpp_rational(xs[j] - xs[j - level]);
      if (j == level) break;
    }
  // Expand sum dd[j] * prod_{i<j} (t - x_i) into monomial coefficients.
  std::vector<cpp_rational> coeffs(m, cpp_rational(0));
  std::vector<cpp_rational> basis{cpp_rational(1)};
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t e = 0; e < basis.size(); ++e) coeffs[e] += dd[j] * basis[e];
    std::vector<cpp_rational> next(basis.size() + 1, cpp_rational(0));
    for (std::size_t e = 0; e < basis.size(); ++e) {
      next[e + 1] += basis[e];
      next[e] -= basis[e] * xs[j];
    }
    basis = std::move(next);
  }
  std::vector<Coeff> out;
  out.reserve(m);
  for (const auto& c : coeffs) {
    if (denominator(c) != 1) return std::nullopt;
    const cpp_int num = numerator(c);
    if (num > std::numeric_limits<Coeff>::max() || num < std::numeric_limits<Coeff>::min())
      return std::nullopt;
    out.push_back(static_cast<Coeff>(num));
  }
  return out;
}

}  // namespace

std::optional<FoxMilnorFactor> fox_milnor_factor_search(const AlexanderForm& a, int degree_bound) {
  if (degree_bound < 0 || degree_bound > kMaxFactorDegree)
    throw std::invalid_argument("degree bound must lie in [0, " +
                                std::to_string(kMaxFactorDegree) + "]");
  if (!a.normalized) throw std::invalid_argument("factor search needs a normalized knot polynomial");
  const LaurentPoly& delta = a.poly;
  const int m = delta.max_exponent();  // symmetric: span is 2m
  if (m > degree_bound) return std::nullopt;

  // F(t) F(t^-1) = Delta with deg F = m means F divides P = t^m Delta, a
  // polynomial with nonzero constant term, so F(x) | P(x) at every integer x.
  const LaurentPoly target = delta.shifted(m);
  std::vector<Sample> samples;
  for (Coeff x = -64; x <= 64; ++x) {
    try {
      const Coeff v = target.evaluate(x);
      if (v != 0 && v <= kMaxSampleMagnitude && v >= -kMaxSampleMagnitude)
        samples.push_back({x, positive_divisors(v)});
    } catch (const std::overflow_error&) {
    }
  }
  if (samples.size() < static_cast<std::size_t>(m + 1))
    throw std::logic_error("not enough interpolation points for factor search");
  std::stable_sort(samples.begin(), samples.end(), [](const Sample& l, const Sample& r) {
    return l.divisors.size() < r.divisors.size();
  });
  samples.resize(static_cast<std::size_t>(m + 1));

  std::vector<Coeff> xs, ys(samples.size());
  for (const auto& s : samples) xs.push_back(s.x);

  std::optional<FoxMilnorFactor> found;
  std::function<void(std::size_t)> search = [&](std::size_t j) {
    if (found) return;
    if (j == samples.size()) {
      auto coeffs = interpolate(xs, ys);
      if (!coeffs || coeffs->back() == 0 || coeffs->front() == 0) return;
      LaurentPoly f;
      for (std::size_t e = 0; e < coeffs->size(); ++e)
        f += LaurentPoly::monomial((*coeffs)[e], static_cast<int>(e));
      f = f.shifted(-(m / 2));
      if (f.evaluate(1) < 0) f = -f;
      if (f * f.substitute_inverse() == delta) found = FoxMilnorFactor{f};
      return;
    }
    for (Coeff d : samples[j].divisors) {
      // F and -F give the same product, so fix the sign at the first point.
      for (Coeff s : {Coeff{1}, Coeff{-1}}) {
        if (j == 0 && s < 0) continue;
        ys[j] = s * d;
        search(j + 1);
        if (found) return;
      }
    }
  };
  search(0);
  return found;
}

}  // namespace braidslice
