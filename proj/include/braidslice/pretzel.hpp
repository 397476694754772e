#pragma once

// Odd pretzel knots P(p,q,r): plat construction, the quasipositivity and
// Alexander criteria, and the nonsliceness verdict.

#include <optional>
#include <string>

#include "braidslice/braid.hpp"
#include "braidslice/invariants.hpp"
#include "braidslice/report.hpp"

namespace braidslice {

/// Three odd twist parameters. Construct through `make_pretzel`, which
/// rejects even entries.
struct PretzelParams {
  Coeff p = 1, q = 1, r = 1;
  friend bool operator==(const PretzelParams&, const PretzelParams&) = default;
};

PretzelParams make_pretzel(Coeff p, Coeff q, Coeff r);

struct PretzelPlat {
  BraidWord word;
  Matching top;
  Matching bottom;
};

/// s_1^{-p} s_3^{-q} s_5^{-r} in B_6 with caps and cups (16)(23)(45).
PretzelPlat pretzel_braid(const PretzelParams& pp);

/// {1, -1} is contained in {p, q, r}.
bool pretzel_is_unknot(const PretzelParams& pp);
/// min{p+q, p+r, q+r} > 0
bool surface_quasipositive(const PretzelParams& pp);
/// qr + rp + pq = -1
bool alexander_is_one(const PretzelParams& pp);

/// [[(p+q)/2, (q+1)/2], [(q-1)/2, (q+r)/2]]
SeifertMatrix2 pretzel_seifert_matrix(const PretzelParams& pp);

/// S(s_1, s_2, s_{2,4}, s_{3,6}, s_{1,4}, s_5, s_{2,5}) in B_6, isotopic to
/// the pretzel surface F(-3,5,7).
BandPresentation pretzel_band_presentation_357();

/// Rearrangement p < 0 < q <= r, mirroring first when two parameters are
/// negative. Empty when all parameters share a sign.
struct PretzelNormalForm {
  PretzelParams params;
  bool mirrored = false;
};
std::optional<PretzelNormalForm> proof_normal_form(const PretzelParams& pp);

ConcordanceReport pretzel_slice_verdict(const PretzelParams& pp);

std::string pretzel_name(const PretzelParams& pp);

}  // namespace braidslice
