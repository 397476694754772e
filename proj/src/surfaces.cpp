#include "braidslice/surfaces.hpp"

#include <stdexcept>

namespace braidslice {

const char* to_string(SliceVerdict v) {
  switch (v) {
    case SliceVerdict::Yes: return "Slice";
    case SliceVerdict::No: return "NotSlice";
    case SliceVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

ChiSVerdict make_chi_s(ChiSVerdict::Kind kind, int value, bool knot) {
  ChiSVerdict v{kind, value, SliceVerdict::Unknown, knot};
  if (!knot) return v;
  if (value < 1)
    v.slice = SliceVerdict::No;
  else if (kind == ChiSVerdict::Kind::Exact && value == 1)
    v.slice = SliceVerdict::Yes;
  return v;
}

int euler_characteristic(const BandPresentation& p) {
  return p.strands - static_cast<int>(p.band_count());
}

SurfaceStats surface_stats(const BandPresentation& p) {
  SurfaceStats s;
  s.chi = euler_characteristic(p);
  s.boundary_components = component_count(expand_presentation(p));
  // A braided surface is connected exactly when its bands connect all disks;
  // genus is only reported for connected surfaces.
  std::vector<int> parent(static_cast<std::size_t>(p.strands));
  for (int i = 0; i < p.strands; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& b : p.bands) {
    const auto moved = underlying_permutation(expand_band(b, p.strands));
    for (int x = 1; x <= p.strands; ++x)
      if (moved(x) != x) parent[static_cast<std::size_t>(find(x - 1))] = find(moved(x) - 1);
  }
  int pieces = 0;
  for (int i = 0; i < p.strands; ++i) pieces += find(i) == i ? 1 : 0;
  s.genus = pieces == 1 ? genus_from_chi(s.chi, s.boundary_components) : 0;
  return s;
}

ChiSVerdict chi_s_exact(const BandPresentation& p) {
  const bool knot = closure_is_knot(expand_presentation(p));
  return make_chi_s(ChiSVerdict::Kind::Exact, euler_characteristic(p), knot);
}

ChiSVerdict bennequin_bound(const BraidWord& w) {
  return make_chi_s(ChiSVerdict::Kind::UpperBound, w.strands() - exponent_sum(w),
                    closure_is_knot(w));
}

PositivePart positive_part(const BraidWord& w) {
  PositivePart out{BraidWord(w.strands()), 0};
  for (const auto& l : w.letters()) {
    if (l.sign > 0)
      out.gamma.push_back(l);
    else
      ++out.nu;
  }
  return out;
}

int genus_from_chi(int chi, int boundary) {
  if (boundary < 1) throw std::invalid_argument("a bounded surface has at least one boundary component");
  if (chi > 2 - boundary) throw std::invalid_argument("Euler characteristic too large for boundary count");
  if ((chi - boundary) % 2 != 0) throw std::invalid_argument("Euler characteristic and boundary count differ in parity");
  return (2 - boundary - chi) / 2;
}

int slice_genus_bound(const BraidWord& w) {
  if (!closure_is_knot(w)) throw std::invalid_argument("slice genus bound needs a knot closure");
  // chi_s = 1 - 2 g_4 <= n - e; the closure being a knot makes n - e odd.
  const int bound = w.strands() - exponent_sum(w);
  const int g = (1 - bound) / 2;
  return g > 0 ? g : 0;
}

int thom_genus(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  return (degree - 1) * (degree - 2) / 2;
}

}  // namespace braidslice
