// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braidslice/analyze.hpp"
#include "braidslice/doubles.hpp"
#include "braidslice/invariants.hpp"
#include "braidslice/pretzel.hpp"
#include "braidslice/surfaces.hpp"
#include "oracles.hpp"

using namespace braidslice;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

const LaurentPoly kTrefoil{{-1, 1}, {0, -1}, {1, 1}};

Outcome fail(const std::string& why) { return {false, why}; }

Outcome trefoil_alexander() {
  const auto t = alexander_closure(parse_word("B2: s1 s1 s1"));
  if (t.poly != kTrefoil) return fail("trefoil gave " + to_string(t.poly));
  const auto g = alexander_closure(parse_word("B3: s1^3 s2^3"));
  if (g.poly != kTrefoil * kTrefoil) return fail("granny gave " + to_string(g.poly));
  return {true, "trefoil " + to_string(t.poly) + ", granny " + to_string(g.poly)};
}

Outcome annulus_corpus() {
  const auto p = trefoil_annulus();
  const auto w = expand_presentation(p);
  if (euler_characteristic(p) != 0) return fail("chi != 0");
  const auto comps = closure_components(w);
  if (comps.size() != 2) return fail("components != 2");
  for (const auto& c : comps) {
    const auto d = alexander_closure(erase_strands(w, c)).poly;
    if (d != kTrefoil) return fail("component Delta " + to_string(d));
  }
  if (exponent_sum(w) != 6) return fail("e != 6");
  return {true, "chi=0, 2 components, both trefoils, e=6"};
}

Outcome double_corpus() {
  const auto p = trefoil_double();
  const auto w = expand_presentation(p);
  if (euler_characteristic(p) != -1) return fail("chi != -1");
  if (!closure_is_knot(w)) return fail("not a knot");
  if (alexander_closure(w).poly != LaurentPoly(1)) return fail("Delta != 1");
  const auto chi = chi_s_exact(p);
  if (!chi.exact() || chi.value != -1) return fail("chi_s != Exact(-1)");
  if (analyze_presentation(p, "double").slice != SliceVerdict::No) return fail("verdict not NotSlice");
  return {true, "chi=-1, knot, Delta=1, chi_s=Exact(-1), NotSlice"};
}

Outcome pretzel_corpus() {
  const auto p = pretzel_band_presentation_357();
  const auto w = expand_presentation(p);
  if (euler_characteristic(p) != -1) return fail("chi != -1");
  if (!closure_is_knot(w)) return fail("not a knot");
  if (alexander_closure(w).poly != LaurentPoly(1)) return fail("Delta != 1");
  if (!surface_quasipositive({-3, 5, 7})) return fail("min pairwise sum criterion false");
  if (analyze_presentation(p, "pretzel").slice != SliceVerdict::No) return fail("presentation verdict");
  if (pretzel_slice_verdict({-3, 5, 7}).slice != SliceVerdict::No) return fail("pretzel verdict");
  if (slice_genus_bound(w) != 1) return fail("slice genus bound != 1");
  return {true, "chi=-1, knot, Delta=1, min{2,4,12}>0, NotSlice, g4>=1"};
}

Outcome double_formula() {
  int checked = 0;
  for (Coeff tau = -10; tau <= 10; ++tau)
    for (auto sign : {DoubleSign::Positive, DoubleSign::Negative}) {
      const auto a = alexander_from_seifert2(seifert_matrix_double(tau, sign));
      // 1 -+ tau (t - 2 + t^-1), written out independently of the library
      const Coeff s = sign == DoubleSign::Positive ? -tau : tau;
      const LaurentPoly expected{{-1, s}, {0, 1 - 2 * s}, {1, s}};
      if (a.poly != expected)
        return fail("tau=" + std::to_string(tau) + " sign " + sign_symbol(sign) + ": " + to_string(a.poly));
      ++checked;
    }
  for (auto sign : {DoubleSign::Positive, DoubleSign::Negative})
    if (!genus1_a_slice(seifert_matrix_double(0, sign))) return fail("not A-slice at tau=0");
  return {true, std::to_string(checked) + " matrices"};
}

Outcome pretzel_equivalence() {
  int triples = 0, ones = 0;
  for (Coeff p = -25; p <= 25; p += 2)
    for (Coeff q = -25; q <= 25; q += 2)
      for (Coeff r = -25; r <= 25; r += 2) {
        const PretzelParams pp{p, q, r};
        const bool one = alexander_from_seifert2(pretzel_seifert_matrix(pp)).poly == LaurentPoly(1);
        const bool dblstar = q * r + r * p + p * q == -1;
        if (one != dblstar) return fail("exception at " + pretzel_name(pp));
        ++triples;
        ones += one ? 1 : 0;
      }
  return {true, std::to_string(triples) + " triples, " + std::to_string(ones) + " with Delta=1"};
}

Outcome proof_dichotomy() {
  long long considered = 0, raw_failures = 0;
  for (Coeff p = -99; p <= 99; p += 2)
    for (Coeff q = -99; q <= 99; q += 2)
      for (Coeff r = -99; r <= 99; r += 2) {
        const PretzelParams pp{p, q, r};
        if (q * r + r * p + p * q != -1 || pretzel_is_unknot(pp)) continue;
        ++considered;
        const auto normal = proof_normal_form(pp);
        if (!normal || !surface_quasipositive(normal->params)) return fail("exception at " + pretzel_name(pp));
        if (pretzel_slice_verdict(pp).slice != SliceVerdict::No) return fail("not certified: " + pretzel_name(pp));
        raw_failures += surface_quasipositive(pp) ? 0 : 1;
      }
  return {true, std::to_string(considered) + " triples certified (" + std::to_string(raw_failures) +
                    " needed the mirror)"};
}

Outcome bennequin_tightness() {
  std::mt19937 rng(20260401);
  constexpr int kTrials = 2000;
  for (int k = 0; k < kTrials; ++k) {
    const auto p = oracle::random_quasipositive(rng, 8, 12);
    const auto bound = bennequin_bound(expand_presentation(p));
    const auto exact = chi_s_exact(p);
    if (bound.value != exact.value) return fail("bound " + std::to_string(bound.value) + " vs " +
                                                std::to_string(exact.value));
  }
  return {true, std::to_string(kTrials) + " presentations"};
}

Outcome burau_invariance() {
  std::mt19937 rng(1234);
  constexpr int kTrials = 1000;
  for (int k = 0; k < kTrials; ++k) {
    const BraidWord w = oracle::random_word(rng, 6, 12);
    const auto base = alexander_closure(w);
    const int n = w.strands();
    std::uniform_int_distribution<int> index(1, n - 1), coin(0, 1);
    std::uniform_int_distribution<std::size_t> pos(0, w.length());

    if (alexander_closure(w.rotated(pos(rng) % (w.length() + 1))) != base) return fail("rotation: " + render_word(w));

    std::vector<Letter> ls = w.letters();
    const Letter l{index(rng), coin(rng) ? 1 : -1};
    const auto at = static_cast<std::ptrdiff_t>(pos(rng));
    ls.insert(ls.begin() + at, {l, l.inverse()});
    if (alexander_closure(BraidWord(n, ls)) != base) return fail("insertion: " + render_word(w));

    BraidWord stab(n + 1, w.letters());
    stab.push_back({n, coin(rng) ? 1 : -1});
    if (alexander_closure(stab) != base) return fail("stabilization: " + render_word(w));
  }
  return {true, std::to_string(kTrials) + " words x 3 moves"};
}

Outcome classical_contrast() {
  const auto dbl = analyze_presentation(trefoil_double(), "D(trefoil,0,+)");
  const bool dbl_fm = fox_milnor_necessary(dbl.alexander);
  const bool dbl_a = genus1_a_slice(seifert_matrix_double(0, DoubleSign::Positive));
  if (!dbl_fm || !dbl_a || dbl.slice != SliceVerdict::No) return fail("double");

  const PretzelParams pp{-3, 5, 7};
  const auto pz = pretzel_slice_verdict(pp);
  const bool pz_fm = fox_milnor_necessary(pz.alexander);
  const bool pz_a = genus1_a_slice(pretzel_seifert_matrix(pp));
  if (!pz_fm || !pz_a || pz.slice != SliceVerdict::No) return fail("pretzel");
  return {true, "Fox-Milnor and A-slice silent, verdict NotSlice for both"};
}

Outcome factor_search() {
  const LaurentPoly square = kTrefoil * kTrefoil;
  const auto f = fox_milnor_factor_search({square, true}, 12);
  if (!f) return fail("square knot: no factor");
  if (!equal_up_to_units(f->factor * f->factor.substitute_inverse(), square)) return fail("factor does not verify");
  if (fox_milnor_factor_search({kTrefoil, true}, 12)) return fail("trefoil: factor found");
  return {true, "square knot F = " + to_string(f->factor) + ", trefoil NotFound"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "trefoil and granny Alexander polynomials", 1, trefoil_alexander},
      {2, "trefoil annulus presentation", 1, annulus_corpus},
      {3, "double-of-trefoil presentation", 1, double_corpus},
      {4, "P(-3,5,7) presentation", 1, pretzel_corpus},
      {5, "double Alexander formula, tau in [-10,10]", 1, double_formula},
      {6, "pretzel Delta=1 iff qr+rp+pq=-1, |p|,|q|,|r|<=25", 10, pretzel_equivalence},
      {7, "pretzel proof dichotomy, |p|,|q|,|r|<=99", 60, proof_dichotomy},
      {8, "Bennequin bound tight on quasipositive braids", 30, bennequin_tightness},
      {9, "Alexander polynomial invariant under Markov-type moves", 30, burau_invariance},
      {10, "classical obstructions silent where quasipositivity decides", 1, classical_contrast},
      {11, "Fox-Milnor factor search", 5, factor_search},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) o = fail("took " + std::to_string(secs) + " s");
    failures += o.ok ? 0 : 1;
    std::printf("%s [%d] %s: %s (%.3f s, limit %.0f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), secs, c.limit_seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
