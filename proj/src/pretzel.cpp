#include "braidslice/pretzel.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "braidslice/surfaces.hpp"

namespace braidslice {

namespace {

bool odd(Coeff x) { return x % 2 != 0; }

void require_odd(const PretzelParams& pp) {
  if (!odd(pp.p) || !odd(pp.q) || !odd(pp.r))
    throw std::invalid_argument("pretzel parameters must all be odd, got " + pretzel_name(pp));
}

Coeff pairwise_products(const PretzelParams& pp) {
  using checked::add;
  using checked::mul;
  return add(add(mul(pp.q, pp.r), mul(pp.r, pp.p)), mul(pp.p, pp.q));
}

}  // namespace

std::string pretzel_name(const PretzelParams& pp) {
  return "P(" + std::to_string(pp.p) + "," + std::to_string(pp.q) + "," + std::to_string(pp.r) + ")";
}

PretzelParams make_pretzel(Coeff p, Coeff q, Coeff r) {
  PretzelParams pp{p, q, r};
  require_odd(pp);
  return pp;
}

PretzelPlat pretzel_braid(const PretzelParams& pp) {
  BraidWord w(6);
  for (auto [index, twists] : std::array<std::pair<int, Coeff>, 3>{{{1, pp.p}, {3, pp.q}, {5, pp.r}}}) {
    const int sign = twists > 0 ? -1 : 1;
    for (Coeff k = 0; k < (twists < 0 ? -twists : twists); ++k) w.push_back({index, sign});
  }
  const Matching pairing{{1, 6}, {2, 3}, {4, 5}};
  return {std::move(w), pairing, pairing};
}

bool pretzel_is_unknot(const PretzelParams& pp) {
  const std::array values{pp.p, pp.q, pp.r};
  return std::count(values.begin(), values.end(), 1) > 0 &&
         std::count(values.begin(), values.end(), -1) > 0;
}

bool surface_quasipositive(const PretzelParams& pp) {
  return std::min({pp.p + pp.q, pp.p + pp.r, pp.q + pp.r}) > 0;
}

bool alexander_is_one(const PretzelParams& pp) { return pairwise_products(pp) == -1; }

SeifertMatrix2 pretzel_seifert_matrix(const PretzelParams& pp) {
  require_odd(pp);
  return {(pp.p + pp.q) / 2, (pp.q + 1) / 2, (pp.q - 1) / 2, (pp.q + pp.r) / 2};
}

BandPresentation pretzel_band_presentation_357() {
  BandPresentation p{6, {}};
  for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {2, 4}, {3, 6}, {1, 4}, {5, 6}, {2, 5}})
    p.bands.emplace_back(EmbeddedBand{i, j});
  return p;
}

std::optional<PretzelNormalForm> proof_normal_form(const PretzelParams& pp) {
  std::array values{pp.p, pp.q, pp.r};
  const auto negatives = std::count_if(values.begin(), values.end(), [](Coeff x) { return x < 0; });
  if (negatives == 0 || negatives == 3) return std::nullopt;
  const bool mirrored = negatives == 2;
  if (mirrored)
    for (auto& v : values) v = -v;
  std::sort(values.begin(), values.end());
  return PretzelNormalForm{{values[0], values[1], values[2]}, mirrored};
}

ConcordanceReport pretzel_slice_verdict(const PretzelParams& pp) {
  require_odd(pp);
  ConcordanceReport r;
  r.name = pretzel_name(pp);
  r.strongly_quasipositive = surface_quasipositive(pp);
  const SeifertMatrix2 v = pretzel_seifert_matrix(pp);
  r.alexander = alexander_from_seifert2(v);
  r.determinant = determinant_invariant(r.alexander);
  r.signature = signature2(v);
  r.a_slice = genus1_a_slice(v);
  r.fox_milnor_silent = fox_milnor_necessary(r.alexander);

  if (pretzel_is_unknot(pp)) {
    r.slice = SliceVerdict::Yes;
    r.provenance.push_back({"unknot", source::kPretzelUnknot});
    return r;
  }
  if (!alexander_is_one(pp)) return r;

  // qr+rp+pq = -1 rules out all parameters sharing a sign.
  const auto normal = proof_normal_form(pp);
  if (!normal) throw std::logic_error("qr+rp+pq = -1 with parameters of one sign: " + r.name);
  if (!surface_quasipositive(normal->params))
    throw std::logic_error("pretzel reduction failed for " + r.name +
                           ": min pairwise sum is not positive");
  if (normal->mirrored)
    r.provenance.push_back({"argue for the mirror " + pretzel_name(normal->params), source::kMirror});
  r.provenance.push_back({"min pairwise sum of " + pretzel_name(normal->params) + " is positive",
                          source::kPretzelReduction});
  r.provenance.push_back({"F bounds a quasipositive Seifert surface with chi = -1",
                          source::kPretzelQuasipositive});
  r.provenance.push_back({"chi_s = -1", source::kQuasipositiveChiS});
  r.provenance.push_back({"chi_s < 1, so not slice", source::kSliceCriterion});
  r.chi_s = make_chi_s(ChiSVerdict::Kind::Exact, -1, true);
  r.slice = r.chi_s->slice;
  return r;
}

}  // namespace braidslice
