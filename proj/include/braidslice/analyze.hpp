#pragma once

#include <string>
#include <string_view>

#include "braidslice/braid.hpp"
#include "braidslice/report.hpp"

namespace braidslice {

/// Bare word: chi_s is only bounded (slice-Bennequin), then Fox-Milnor is
/// tried on knots the bound does not settle.
ConcordanceReport analyze_word(const BraidWord& w, std::string name);

/// Quasipositive presentation: chi_s = n - k exactly.
ConcordanceReport analyze_presentation(const BandPresentation& p, std::string name);

/// Parses `B<n>: ...` or `S<n>: ...` and dispatches.
ConcordanceReport analyze_input(std::string_view text, std::string name);

}  // namespace braidslice
