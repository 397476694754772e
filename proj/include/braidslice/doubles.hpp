#pragma once

// Untwisted doubles: the annulus and double-of-trefoil presentations, the
// Hopf-band plumbing move, and report-level iterated doubling.

#include "braidslice/braid.hpp"
#include "braidslice/invariants.hpp"
#include "braidslice/report.hpp"

namespace braidslice {

/// S(s_{3,6}, s_{1,4}, s_{3,5}, s_{4,6}, s_{2,5}, s_1) in B_6: an untwisted
/// annulus whose core is the trefoil O{2,3}.
BandPresentation trefoil_annulus();

/// S(s_6, s_{3,6}, s_6, s_{1,4}, s_{3,5}, s_{4,6}, s_{2,5}, s_1) in B_7,
/// bounded by D(O{2,3}, 0, +).
BandPresentation trefoil_double();

/// Where a Hopf band is plumbed: around the band at 1-based `band_index`, on
/// a new strand inserted immediately right of strand `column`.
struct PlumbSite {
  int band_index = 1;
  int column = 1;
};

/// Plumbs the negative Hopf annulus A(O,-1) at `site` (sign Positive, which
/// yields the positive double): one new strand at column + 1 and two bands
/// s_{column,column+1} placed directly before and after the chosen band.
/// Strands right of `column` shift up by one, so conjugated bands are only
/// accepted when column is the last strand. On an annulus the boundary
/// becomes a knot when column is an endpoint of the chosen band. Sign
/// Negative needs A(O,+1), which is not quasipositive, and throws
/// std::invalid_argument.
BandPresentation plumb_hopf_band(const BandPresentation& p, PlumbSite site, DoubleSign sign);

/// 1 -+ tau (t - 2 + t^-1)
LaurentPoly double_alexander_formula(Coeff tau, DoubleSign sign);

ConcordanceReport double_report(Coeff tau, DoubleSign sign, bool base_is_sqp_nontrivial);

/// D^1(K) = D(K,0,+), D^i(K) = D(D^{i-1}(K),0,+). Requires i >= 1.
ConcordanceReport iterated_double_report(int i, bool base_is_sqp_nontrivial);

const char* sign_symbol(DoubleSign s);

}  // namespace braidslice
