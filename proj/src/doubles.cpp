#include "braidslice/doubles.hpp"

#include <stdexcept>
#include <string>

namespace braidslice {

namespace {

BandPresentation embedded(int strands, std::initializer_list<std::pair<int, int>> pairs) {
  BandPresentation p{strands, {}};
  for (auto [i, j] : pairs) p.bands.emplace_back(EmbeddedBand{i, j});
  return p;
}

BraidWord widen_conjugator(const BraidWord& w, int column) {
  if (column != w.strands())
    throw std::invalid_argument("conjugated bands only admit plumbing at the last strand");
  BraidWord out(w.strands() + 1);
  for (const auto& l : w.letters()) out.push_back(l);
  return out;
}

void fill_classical(ConcordanceReport& r, const SeifertMatrix2& v, const AlexanderForm& delta) {
  r.alexander = delta;
  r.determinant = determinant_invariant(delta);
  r.signature = signature2(v);
  r.a_slice = genus1_a_slice(v);
  r.fox_milnor_silent = fox_milnor_necessary(delta);
}

}  // namespace

const char* sign_symbol(DoubleSign s) { return s == DoubleSign::Positive ? "+" : "-"; }

BandPresentation trefoil_annulus() {
  return embedded(6, {{3, 6}, {1, 4}, {3, 5}, {4, 6}, {2, 5}, {1, 2}});
}

BandPresentation trefoil_double() {
  return embedded(7, {{6, 7}, {3, 6}, {6, 7}, {1, 4}, {3, 5}, {4, 6}, {2, 5}, {1, 2}});
}

BandPresentation plumb_hopf_band(const BandPresentation& p, PlumbSite site, DoubleSign sign) {
  validate(p);
  if (sign == DoubleSign::Negative)
    throw std::invalid_argument("A(O,+1) is not quasipositive; only the positive double is braided");
  const int k = static_cast<int>(p.band_count());
  if (site.band_index < 1 || site.band_index > k)
    throw std::invalid_argument("plumb site band index " + std::to_string(site.band_index) +
                                " outside 1.." + std::to_string(k));
  if (site.column < 1 || site.column > p.strands)
    throw std::invalid_argument("plumb site column " + std::to_string(site.column) +
                                " outside 1.." + std::to_string(p.strands));

  auto renumber = [&](int strand) { return strand > site.column ? strand + 1 : strand; };
  const Band hopf = EmbeddedBand{site.column, site.column + 1};
  BandPresentation out{p.strands + 1, {}};
  for (int b = 1; b <= k; ++b) {
    const Band& band = p.bands[static_cast<std::size_t>(b - 1)];
    if (b == site.band_index) out.bands.push_back(hopf);
    if (const auto* e = std::get_if<EmbeddedBand>(&band)) {
      out.bands.emplace_back(EmbeddedBand{renumber(e->i), renumber(e->j)});
    } else {
      const auto& c = std::get<ConjugatedBand>(band);
      out.bands.emplace_back(ConjugatedBand{widen_conjugator(c.conjugator, site.column), c.index});
    }
    if (b == site.band_index) out.bands.push_back(hopf);
  }
  return out;
}

LaurentPoly double_alexander_formula(Coeff tau, DoubleSign sign) {
  const LaurentPoly twist{{-1, 1}, {0, -2}, {1, 1}};
  const Coeff s = sign == DoubleSign::Positive ? -1 : 1;
  return LaurentPoly(1) + twist * LaurentPoly(checked::mul(s, tau));
}

ConcordanceReport double_report(Coeff tau, DoubleSign sign, bool base_is_sqp_nontrivial) {
  ConcordanceReport r;
  r.name = "D(K," + std::to_string(tau) + "," + sign_symbol(sign) + ")";
  const SeifertMatrix2 v = seifert_matrix_double(tau, sign);
  fill_classical(r, v, normalize_alexander(double_alexander_formula(tau, sign), true));
  r.provenance.push_back({"Delta = " + to_string(r.alexander.poly), source::kDoubleSeifert});

  if (tau == 0 && sign == DoubleSign::Positive && base_is_sqp_nontrivial) {
    r.strongly_quasipositive = true;
    r.chi_s = make_chi_s(ChiSVerdict::Kind::Exact, -1, true);
    r.slice = r.chi_s->slice;
    r.provenance.push_back({"bounds a quasipositive braided surface with chi = -1",
                            source::kDoubleQuasipositive});
    r.provenance.push_back({"chi_s = -1", source::kQuasipositiveChiS});
    r.provenance.push_back({"chi_s < 1, so not slice", source::kSliceCriterion});
  }
  return r;
}

ConcordanceReport iterated_double_report(int i, bool base_is_sqp_nontrivial) {
  if (i < 1) throw std::invalid_argument("iteration count must be at least 1");
  ConcordanceReport r = double_report(0, DoubleSign::Positive, base_is_sqp_nontrivial);
  r.name = "D^" + std::to_string(i) + "(K)";
  if (base_is_sqp_nontrivial && i > 1)
    r.provenance.insert(r.provenance.begin() + 1,
                        {"D^" + std::to_string(i - 1) + "(K) is nontrivial and strongly quasipositive",
                         source::kIteratedDoubles});
  return r;
}

}  // namespace braidslice
