#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "braidslice/analyze.hpp"
#include "braidslice/braid.hpp"
#include "braidslice/corpus.hpp"

using namespace braidslice;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parsing") {
  const auto entries = parse_corpus(
      "# comment\n"
      "\n"
      "trefoil | B2: s1^3 | components=1 det=3  # trailing\n"
      "bare | S2: s1\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "trefoil");
  CHECK(entries[0].input == "B2: s1^3");
  CHECK(entries[0].line == 3);
  REQUIRE(entries[0].expectations.size() == 2);
  CHECK(entries[0].expectations[1] == std::pair<std::string, std::string>{"det", "3"});
  CHECK(entries[1].expectations.empty());

  CHECK(parse_corpus("").empty());
  CHECK_THROWS_AS(parse_corpus("only-a-name\n"), CorpusError);
  CHECK_THROWS_AS(parse_corpus("a | B2: s1 | b | c\n"), CorpusError);
  CHECK_THROWS_AS(parse_corpus(" | B2: s1 | det=1\n"), CorpusError);
  CHECK_THROWS_AS(parse_corpus("a | B2: s1 | det\n"), CorpusError);
  CHECK_THROWS_AS(parse_corpus("a | B2: s1 | =3\n"), CorpusError);
  try {
    parse_corpus("ok | B2: s1\nbad | B2: s1 | colour=blue\n");
    FAIL("expected CorpusError");
  } catch (const CorpusError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("unknown key") != std::string::npos);
  }
}

TEST_CASE("keys") {
  const auto& keys = corpus_keys();
  for (const char* k : {"strands", "bands", "chi", "exponent", "components", "alexander",
                        "component_alexander", "chi_s", "slice_genus", "sqp", "det", "fox_milnor",
                        "verdict"})
    CHECK(std::find(keys.begin(), keys.end(), k) != keys.end());
}

TEST_CASE("checking entries") {
  const auto ok = parse_corpus("t | B2: s1 s1 s1 | alexander=t^-1-1+t chi_s=-1 verdict=NotSlice\n");
  CHECK(check_entry(ok.front()).empty());

  const auto bad = parse_corpus("t | B2: s1 s1 s1 | det=5 components=1\n");
  const auto mism = check_entry(bad.front());
  REQUIRE(mism.size() == 1);
  CHECK(mism[0].key == "det");
  CHECK(mism[0].expected == "5");
  CHECK(mism[0].actual == "3");

  // alexander compares polynomials, not strings
  CHECK(check_entry(parse_corpus("t | B2: s1^3 | alexander=t-1+t^-1\n").front()).empty());

  // presentation-only keys on a bare word
  CHECK_THROWS_AS(check_entry(parse_corpus("w | B2: s1 | chi=1\n").front()), CorpusError);
  CHECK_THROWS_AS(check_entry(parse_corpus("w | B2: s9 | det=1\n").front()), ParseError);
}

TEST_CASE("shipped corpora hold") {
  for (const char* file : {"surface_presentations.txt", "classical_knots.txt"}) {
    CAPTURE(file);
    const auto entries = parse_corpus(slurp(std::string(BRAIDSLICE_CORPUS_DIR) + "/" + file));
    CHECK(!entries.empty());
    for (const auto& e : entries) {
      CAPTURE(e.name);
      for (const auto& m : check_entry(e))
        FAIL_CHECK(m.key << ": expected " << m.expected << ", got " << m.actual);
    }
  }
}

TEST_CASE("analysis of bare words") {
  const auto fig8 = analyze_input("B3: s1 s2^-1 s1 s2^-1", "4_1");
  CHECK(fig8.slice == SliceVerdict::No);
  CHECK(fig8.fox_milnor_silent == false);
  CHECK(fig8.provenance.back().source == std::string(source::kFoxMilnor));

  const auto unknot = analyze_input("B1:", "unknot");
  CHECK(unknot.slice == SliceVerdict::Unknown);

  const auto hopf = analyze_input("B2: s1 s1", "hopf");
  CHECK(hopf.slice == SliceVerdict::Unknown);
  CHECK(!hopf.fox_milnor_silent.has_value());

  const auto disk = analyze_input("S2: s1", "disk");
  CHECK(disk.slice == SliceVerdict::Yes);
}
