#include "braidslice/analyze.hpp"

#include "braidslice/invariants.hpp"
#include "braidslice/surfaces.hpp"

namespace braidslice {

namespace {

void fill_alexander(ConcordanceReport& r, const BraidWord& w) {
  r.alexander = alexander_closure(w);
  r.determinant = determinant_invariant(r.alexander);
  if (r.alexander.normalized) r.fox_milnor_silent = fox_milnor_necessary(r.alexander);
}

void settle_with_fox_milnor(ConcordanceReport& r) {
  if (r.slice != SliceVerdict::Unknown || !r.fox_milnor_silent || *r.fox_milnor_silent) return;
  r.slice = SliceVerdict::No;
  r.provenance.push_back({"determinant " + std::to_string(r.determinant) + " is not a square",
                          source::kFoxMilnor});
}

}  // namespace

ConcordanceReport analyze_word(const BraidWord& w, std::string name) {
  ConcordanceReport r;
  r.name = std::move(name);
  r.strongly_quasipositive = false;
  r.chi_s = bennequin_bound(w);
  fill_alexander(r, w);
  r.slice = r.chi_s->slice;
  if (r.slice == SliceVerdict::No) {
    r.provenance.push_back({"chi_s <= " + std::to_string(r.chi_s->value), source::kSliceBennequin});
    r.provenance.push_back({"chi_s < 1, so not slice", source::kSliceCriterion});
  }
  settle_with_fox_milnor(r);
  return r;
}

ConcordanceReport analyze_presentation(const BandPresentation& p, std::string name) {
  ConcordanceReport r;
  r.name = std::move(name);
  r.strongly_quasipositive = p.strongly_quasipositive();
  r.chi_s = chi_s_exact(p);
  fill_alexander(r, expand_presentation(p));
  r.slice = r.chi_s->slice;
  if (r.slice != SliceVerdict::Unknown) {
    r.provenance.push_back({"chi_s = " + std::to_string(r.chi_s->value), source::kQuasipositiveChiS});
    r.provenance.push_back({r.slice == SliceVerdict::No ? "chi_s < 1, so not slice" : "chi_s = 1, so slice",
                            source::kSliceCriterion});
  }
  settle_with_fox_milnor(r);
  return r;
}

ConcordanceReport analyze_input(std::string_view text, std::string name) {
  auto parsed = parse_input(text);
  if (const auto* w = std::get_if<BraidWord>(&parsed)) return analyze_word(*w, std::move(name));
  return analyze_presentation(std::get<BandPresentation>(parsed), std::move(name));
}

}  // namespace braidslice
