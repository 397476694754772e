#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidslice/invariants.hpp"
#include "braidslice/surfaces.hpp"

namespace braidslice {

/// One justification line: what was concluded and the theorem it rests on.
struct Provenance {
  std::string claim;
  std::string source;
};

/// Theorem labels shared by every report.
namespace source {
inline constexpr const char* kQuasipositiveChiS =
    "Kronheimer-Mrowka corollary: the closure of a quasipositive braid with k bands on n "
    "strands has chi_s = n - k";
inline constexpr const char* kSliceCriterion = "a knot is slice iff chi_s = 1";
inline constexpr const char* kSliceBennequin =
    "slice-Bennequin inequality: chi_s(closure of b) <= n - e(b)";
inline constexpr const char* kDoubleQuasipositive =
    "untwisted positive double of a nontrivial strongly quasipositive knot bounds a "
    "quasipositive braided Seifert surface with chi = -1";
inline constexpr const char* kIteratedDoubles =
    "induction: each iterated untwisted positive double is again nontrivial and strongly "
    "quasipositive";
inline constexpr const char* kPretzelQuasipositive =
    "odd pretzel F(p,q,r) is quasipositive iff min{p+q, p+r, q+r} > 0";
inline constexpr const char* kPretzelReduction =
    "with p < 0 < q <= r and qr+rp+pq = -1, failure of min{p+q,p+r,q+r} > 0 forces "
    "q = 1, p = -1";
inline constexpr const char* kPretzelUnknot = "odd pretzel containing both 1 and -1 is the unknot";
inline constexpr const char* kMirror = "sliceness is invariant under mirroring";
inline constexpr const char* kFoxMilnor =
    "Fox-Milnor: a slice knot has Delta = F(t)F(t^-1), so its determinant is a square";
inline constexpr const char* kDoubleSeifert =
    "doubles D(K,tau,+-) have Seifert matrix [[tau,1],[0,-+1]]";
}  // namespace source

struct ConcordanceReport {
  std::string name;
  bool strongly_quasipositive = false;
  std::optional<ChiSVerdict> chi_s;
  AlexanderForm alexander;
  Coeff determinant = 0;
  std::optional<int> signature;
  std::optional<bool> a_slice;
  /// fox_milnor_necessary: true means the determinant test is silent.
  std::optional<bool> fox_milnor_silent;
  SliceVerdict slice = SliceVerdict::Unknown;
  std::vector<Provenance> provenance;
};

/// Multi-line human-readable rendering.
std::string render_report(const ConcordanceReport& r);

/// "yes" / "no" / "unknown"
std::string tri_state(const std::optional<bool>& v);

}  // namespace braidslice
