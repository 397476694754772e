#pragma once

// Classical invariants: reduced Burau matrices, Alexander polynomials of
// closed braids, and the genus-1 Seifert matrix toolkit.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "braidslice/braid.hpp"
#include "braidslice/laurent.hpp"

namespace braidslice {

/// Raised when the Burau determinant is not divisible by 1 + t + ... + t^{n-1}
/// or a knot polynomial fails to normalize. Never expected for valid input.
class DegenerateDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense square matrix over Z[t, t^-1].
class LaurentMatrix {
 public:
  explicit LaurentMatrix(std::size_t dim);
  static LaurentMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return cells_[r * dim_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return cells_[r * dim_ + c]; }

  /// Fraction-free (Bareiss) elimination with exact Laurent division.
  LaurentPoly determinant() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<LaurentPoly> cells_;
};

/// Reduced Burau matrix of a single generator in B_n.
LaurentMatrix reduced_burau_generator(int strands, Letter l);
/// Product of generator matrices in word order. Requires n >= 2.
LaurentMatrix reduced_burau(const BraidWord& w);

struct AlexanderForm {
  LaurentPoly poly;
  /// Symmetric with value 1 at t = 1 (knots only).
  bool normalized = false;
  friend bool operator==(const AlexanderForm&, const AlexanderForm&) = default;
};

/// Picks the canonical representative of poly up to +-t^k: the symmetric one
/// with p(1) = 1 when `knot`, otherwise min exponent 0 with a positive
/// leading coefficient.
AlexanderForm normalize_alexander(const LaurentPoly& poly, bool knot);

/// det(I - burau(w)) / (1 + t + ... + t^{n-1}), normalized.
AlexanderForm alexander_closure(const BraidWord& w);

/// Rows [[a, b], [c, d]].
struct SeifertMatrix2 {
  Coeff a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const SeifertMatrix2&, const SeifertMatrix2&) = default;
};

enum class DoubleSign { Positive, Negative };

/// Seifert matrix of the tau-twisted positive/negative double:
/// [[tau, 1], [0, -1]] for Positive, [[tau, 1], [0, 1]] for Negative.
SeifertMatrix2 seifert_matrix_double(Coeff tau, DoubleSign sign);

/// det(tV - V^T), normalized. Throws std::domain_error when the value at
/// t = 1 vanishes.
AlexanderForm alexander_from_seifert2(const SeifertMatrix2& v);

/// |Delta(-1)|
Coeff determinant_invariant(const AlexanderForm& a);

/// Knot determinant is a perfect square. False proves the knot is not slice.
bool fox_milnor_necessary(const AlexanderForm& a);

constexpr int kMaxFactorDegree = 12;

struct FoxMilnorFactor {
  LaurentPoly factor;  // F with F(t) F(t^-1) = +-t^k Delta
};

/// Searches every integer polynomial F of degree <= degree_bound with
/// F(t) F(t^-1) = +-t^k Delta, by Kronecker's interpolation method.
/// nullopt means no such F exists within the bound. Throws
/// std::invalid_argument for degree_bound outside [0, 12] or an unnormalized
/// input.
std::optional<FoxMilnorFactor> fox_milnor_factor_search(const AlexanderForm& a,
                                                        int degree_bound = kMaxFactorDegree);

/// Signature of V + V^T, from the signs of its determinant and trace.
int signature2(const SeifertMatrix2& v);

/// The form a x^2 + (b + c) x y + d y^2 has a nontrivial integer zero, i.e.
/// the pairing vanishes on a rank-1 summand.
bool genus1_a_slice(const SeifertMatrix2& v);

bool is_perfect_square(Coeff n);

}  // namespace braidslice
