#include "braidslice/report.hpp"

#include <sstream>

namespace braidslice {

std::string tri_state(const std::optional<bool>& v) {
  if (!v) return "unknown";
  return *v ? "yes" : "no";
}

std::string render_report(const ConcordanceReport& r) {
  std::ostringstream out;
  out << "name: " << r.name << '\n';
  out << "strongly quasipositive: " << (r.strongly_quasipositive ? "yes" : "no") << '\n';
  if (r.chi_s) {
    out << "chi_s: " << (r.chi_s->exact() ? "= " : "<= ") << r.chi_s->value << '\n';
    out << "closure: " << (r.chi_s->knot ? "knot" : "link") << '\n';
  }
  out << "alexander: " << to_string(r.alexander.poly)
      << (r.alexander.normalized ? "" : " (unnormalized link representative)") << '\n';
  out << "determinant: " << r.determinant << '\n';
  if (r.signature) out << "signature: " << *r.signature << '\n';
  out << "a-slice: " << tri_state(r.a_slice) << '\n';
  if (r.fox_milnor_silent)
    out << "fox-milnor: " << (*r.fox_milnor_silent ? "silent" : "obstructs") << '\n';
  out << "verdict: " << to_string(r.slice) << '\n';
  for (const auto& p : r.provenance) out << "  because " << p.claim << " [" << p.source << "]\n";
  return out.str();
}

}  // namespace braidslice
