#pragma once

// Euler characteristics of braided surfaces and the 4-dimensional bounds
// derived from them.

#include <utility>

#include "braidslice/braid.hpp"

namespace braidslice {

enum class SliceVerdict { Yes, No, Unknown };

const char* to_string(SliceVerdict v);

/// chi_s of a closed braid, either known exactly (quasipositive input) or
/// only bounded above (slice-Bennequin).
struct ChiSVerdict {
  enum class Kind { Exact, UpperBound };
  Kind kind = Kind::UpperBound;
  int value = 0;
  SliceVerdict slice = SliceVerdict::Unknown;
  bool knot = false;

  bool exact() const noexcept { return kind == Kind::Exact; }
  friend bool operator==(const ChiSVerdict&, const ChiSVerdict&) = default;
};

/// Applies the slice rules: on a knot, Exact(1) is slice, any value below 1
/// is not slice, everything else is unknown.
ChiSVerdict make_chi_s(ChiSVerdict::Kind kind, int value, bool knot);

struct SurfaceStats {
  int chi = 0;
  int boundary_components = 1;
  int genus = 0;
};

/// n - k for S(b_1, ..., b_k) in B_n.
int euler_characteristic(const BandPresentation& p);

/// Stats of the braided surface: chi, closure component count and genus.
SurfaceStats surface_stats(const BandPresentation& p);

/// chi_s of the closure of a quasipositive presentation is exactly n - k.
ChiSVerdict chi_s_exact(const BandPresentation& p);

/// chi_s(closure of w) <= n - e(w).
ChiSVerdict bennequin_bound(const BraidWord& w);

struct PositivePart {
  BraidWord gamma;
  int nu = 0;
};

/// Deletes the negative letters: gamma keeps the positive letters in order,
/// nu counts the deleted ones.
PositivePart positive_part(const BraidWord& w);

/// (2 - boundary - chi) / 2. Throws std::invalid_argument on parity or
/// range violations.
int genus_from_chi(int chi, int boundary);

/// Lower bound for the smooth 4-genus of a knot closure from the
/// slice-Bennequin inequality, clamped at 0. Throws if the closure is a link.
int slice_genus_bound(const BraidWord& w);

/// (d - 1)(d - 2) / 2
int thom_genus(int degree);

}  // namespace braidslice
