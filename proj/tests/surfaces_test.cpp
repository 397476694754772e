#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "braidslice/doubles.hpp"
#include "braidslice/pretzel.hpp"
#include "braidslice/surfaces.hpp"
#include "oracles.hpp"

using namespace braidslice;
using Kind = ChiSVerdict::Kind;

TEST_CASE("euler characteristic and surface stats") {
  CHECK(euler_characteristic(trefoil_annulus()) == 0);
  CHECK(euler_characteristic(trefoil_double()) == -1);
  CHECK(euler_characteristic(pretzel_band_presentation_357()) == -1);
  CHECK(euler_characteristic(BandPresentation{4, {}}) == 4);

  const auto annulus = surface_stats(trefoil_annulus());
  CHECK(annulus.chi == 0);
  CHECK(annulus.boundary_components == 2);
  CHECK(annulus.genus == 0);

  const auto dbl = surface_stats(trefoil_double());
  CHECK(dbl.boundary_components == 1);
  CHECK(dbl.genus == 1);
  CHECK(surface_stats(pretzel_band_presentation_357()).genus == 1);

  // Two disks, no bands: disconnected, genus not reported.
  const auto split = surface_stats(BandPresentation{2, {}});
  CHECK(split.chi == 2);
  CHECK(split.boundary_components == 2);
  CHECK(split.genus == 0);
}

TEST_CASE("verdict rules") {
  CHECK(make_chi_s(Kind::Exact, 1, true).slice == SliceVerdict::Yes);
  CHECK(make_chi_s(Kind::Exact, -1, true).slice == SliceVerdict::No);
  CHECK(make_chi_s(Kind::UpperBound, -1, true).slice == SliceVerdict::No);
  CHECK(make_chi_s(Kind::UpperBound, 1, true).slice == SliceVerdict::Unknown);
  CHECK(make_chi_s(Kind::UpperBound, 3, true).slice == SliceVerdict::Unknown);
  CHECK(make_chi_s(Kind::Exact, -1, false).slice == SliceVerdict::Unknown);
  CHECK(std::string(to_string(SliceVerdict::No)) == "NotSlice");
  CHECK(std::string(to_string(SliceVerdict::Yes)) == "Slice");
  CHECK(std::string(to_string(SliceVerdict::Unknown)) == "Unknown");
}

TEST_CASE("chi_s of the shipped presentations") {
  const auto a = chi_s_exact(trefoil_annulus());
  CHECK(a.exact());
  CHECK(a.value == 0);
  CHECK(!a.knot);
  CHECK(a.slice == SliceVerdict::Unknown);

  for (const auto& p : {trefoil_double(), pretzel_band_presentation_357()}) {
    const auto v = chi_s_exact(p);
    CHECK(v == ChiSVerdict{Kind::Exact, -1, SliceVerdict::No, true});
  }
}

TEST_CASE("tree-shaped presentations bound a disk") {
  // n - 1 bands joining n disks in a tree: the closure is an unknot, chi_s = 1.
  std::mt19937 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> strands(1, 8);
    const int n = strands(rng);
    BandPresentation p{n, {}};
    for (int j = 2; j <= n; ++j) {
      std::uniform_int_distribution<int> parent(1, j - 1);
      p.bands.emplace_back(EmbeddedBand{parent(rng), j});
    }
    std::shuffle(p.bands.begin(), p.bands.end(), rng);
    const auto v = chi_s_exact(p);
    CHECK(v.value == 1);
    CHECK(v.knot);
    CHECK(v.slice == SliceVerdict::Yes);
  }
}

TEST_CASE("chi is independent of band order") {
  std::mt19937 rng(4);
  for (int k = 0; k < 200; ++k) {
    auto p = oracle::random_quasipositive(rng, 8, 10);
    const int chi = euler_characteristic(p);
    const int comps = component_count(expand_presentation(p));
    std::shuffle(p.bands.begin(), p.bands.end(), rng);
    CHECK(euler_characteristic(p) == chi);
    // Each band is a transposition, so components = n - k mod 2 in any order.
    CHECK((component_count(expand_presentation(p)) - comps) % 2 == 0);
  }
}

TEST_CASE("Bennequin bound is tight on quasipositive words") {
  std::mt19937 rng(77);
  for (int k = 0; k < 500; ++k) {
    const auto p = oracle::random_quasipositive(rng, 8, 12);
    const auto bound = bennequin_bound(expand_presentation(p));
    const auto exact = chi_s_exact(p);
    CHECK(bound.value == exact.value);
    CHECK(bound.knot == exact.knot);
    CHECK(!bound.exact());
  }
}

TEST_CASE("positive part") {
  const BraidWord w(3, {{1, 1}, {2, -1}, {1, 1}, {2, -1}, {2, 1}});
  const auto pp = positive_part(w);
  CHECK(pp.gamma == BraidWord(3, {{1, 1}, {1, 1}, {2, 1}}));
  CHECK(pp.nu == 2);
  // e(w) = e(gamma) - nu
  std::mt19937 rng(6);
  for (int k = 0; k < 300; ++k) {
    const auto r = oracle::random_word(rng, 7, 20);
    const auto q = positive_part(r);
    CHECK(exponent_sum(r) == exponent_sum(q.gamma) - q.nu);
    CHECK(static_cast<int>(q.gamma.length()) + q.nu == static_cast<int>(r.length()));
  }
}

TEST_CASE("genus bookkeeping") {
  CHECK(genus_from_chi(-1, 1) == 1);
  CHECK(genus_from_chi(1, 1) == 0);
  CHECK(genus_from_chi(0, 2) == 0);
  CHECK(genus_from_chi(-3, 1) == 2);
  CHECK_THROWS_AS(genus_from_chi(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(genus_from_chi(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(genus_from_chi(1, 0), std::invalid_argument);

  CHECK(slice_genus_bound(parse_word("B2: s1 s1 s1")) == 1);
  CHECK(slice_genus_bound(parse_word("B3: s1^3 s2^3")) == 2);
  CHECK(slice_genus_bound(parse_word("B3: s1 s2^-1 s1 s2^-1")) == 0);
  CHECK(slice_genus_bound(parse_word("B1:")) == 0);
  CHECK(slice_genus_bound(expand_presentation(trefoil_double())) == 1);
  CHECK_THROWS_AS(slice_genus_bound(parse_word("B2: s1 s1")), std::invalid_argument);

  CHECK(thom_genus(1) == 0);
  CHECK(thom_genus(3) == 1);
  CHECK(thom_genus(4) == 3);
  CHECK_THROWS(thom_genus(0));
}
