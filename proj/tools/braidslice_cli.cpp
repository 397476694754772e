// braidslice: command-line front end.
//
// Exit codes: 0 success, 1 expectation mismatch or failed check, 2 input error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "braidslice/analyze.hpp"
#include "braidslice/braid.hpp"
#include "braidslice/corpus.hpp"
#include "braidslice/doubles.hpp"
#include "braidslice/pretzel.hpp"

namespace bs = braidslice;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

const char* kPretzelHeader = "p,q,r,unknot,star,dblstar,delta,det,signature,a_slice,fm_silent,verdict";
const char* kDoubleHeader = "i,tau,sign,delta,det,signature,a_slice,fm_silent,verdict";
const char* kReportHeader = "name,strands,components,chi_s,chi_s_kind,delta,det,fm_silent,verdict";

std::string flag(bool b) { return b ? "1" : "0"; }
std::string flag(const std::optional<bool>& b) { return b ? flag(*b) : ""; }

std::string pretzel_row(const bs::PretzelParams& pp, const bs::ConcordanceReport& r) {
  std::ostringstream out;
  out << pp.p << ',' << pp.q << ',' << pp.r << ',' << flag(bs::pretzel_is_unknot(pp)) << ','
      << flag(bs::surface_quasipositive(pp)) << ',' << flag(bs::alexander_is_one(pp)) << ','
      << bs::to_string(r.alexander.poly) << ',' << r.determinant << ','
      << (r.signature ? std::to_string(*r.signature) : "") << ',' << flag(r.a_slice) << ','
      << flag(r.fox_milnor_silent) << ',' << bs::to_string(r.slice);
  return out.str();
}

std::string double_row(int i, bs::Coeff tau, bs::DoubleSign sign, const bs::ConcordanceReport& r) {
  std::ostringstream out;
  out << i << ',' << tau << ',' << bs::sign_symbol(sign) << ',' << bs::to_string(r.alexander.poly)
      << ',' << r.determinant << ',' << (r.signature ? std::to_string(*r.signature) : "") << ','
      << flag(r.a_slice) << ',' << flag(r.fox_milnor_silent) << ',' << bs::to_string(r.slice);
  return out.str();
}

std::string report_row(const bs::ConcordanceReport& r, int strands, int components) {
  std::ostringstream out;
  out << r.name << ',' << strands << ',' << components << ',';
  if (r.chi_s) out << r.chi_s->value << ',' << (r.chi_s->exact() ? "exact" : "bound");
  else out << ',';
  out << ',' << bs::to_string(r.alexander.poly) << ',' << r.determinant << ','
      << flag(r.fox_milnor_silent) << ',' << bs::to_string(r.slice);
  return out.str();
}

// Appends rows to `path`, writing the header first when the file is new or empty.
void append_csv(const std::string& path, const std::string& header, const std::vector<std::string>& rows) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path);
  if (fresh) out << header << '\n';
  for (const auto& row : rows) out << row << '\n';
}

std::optional<bs::DoubleSign> parse_sign(const std::string& s) {
  if (s == "+" || s == "plus" || s == "positive") return bs::DoubleSign::Positive;
  if (s == "-" || s == "minus" || s == "negative") return bs::DoubleSign::Negative;
  return std::nullopt;
}

std::vector<bs::Coeff> odd_range(int max) {
  std::vector<bs::Coeff> out;
  for (int v = -max; v <= max; ++v)
    if (v % 2 != 0) out.push_back(v);
  return out;
}

// Rows are produced per value of p on worker threads and emitted in order.
int sweep_pretzel(int max, bool only_dblstar, std::ostream& out, bool quiet) {
  const auto values = odd_range(max);
  std::vector<std::vector<std::string>> rows(values.size());
  std::vector<std::string> failures(values.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < values.size(); i += workers) {
        try {
          for (auto q : values)
            for (auto r : values) {
              const bs::PretzelParams pp{values[i], q, r};
              if (only_dblstar && !bs::alexander_is_one(pp)) continue;
              rows[i].push_back(pretzel_row(pp, bs::pretzel_slice_verdict(pp)));
            }
        } catch (const std::exception& e) {
          failures[i] = e.what();
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  out << kPretzelHeader << '\n';
  std::size_t count = 0;
  for (const auto& chunk : rows) {
    for (const auto& row : chunk) out << row << '\n';
    count += chunk.size();
  }
  int failed = 0;
  for (const auto& f : failures)
    if (!f.empty()) {
      std::cerr << "check failed: " << f << '\n';
      ++failed;
    }
  if (!quiet) std::cerr << "pretzel sweep: " << count << " rows, " << failed << " failed checks\n";
  return failed == 0 ? kOk : kMismatch;
}

int run_expand(const std::string& input) {
  auto parsed = bs::parse_input(input);
  if (const auto* p = std::get_if<bs::BandPresentation>(&parsed))
    std::cout << bs::render_word(bs::expand_presentation(*p)) << '\n';
  else
    std::cout << bs::render_word(std::get<bs::BraidWord>(parsed)) << '\n';
  return kOk;
}

int run_report(const std::string& input, const std::string& name, const std::string& csv, bool quiet) {
  auto parsed = bs::parse_input(input);
  const bs::BraidWord word = std::holds_alternative<bs::BraidWord>(parsed)
                                 ? std::get<bs::BraidWord>(parsed)
                                 : bs::expand_presentation(std::get<bs::BandPresentation>(parsed));
  const auto report = bs::analyze_input(input, name.empty() ? input : name);
  if (!quiet) std::cout << bs::render_report(report);
  if (!csv.empty()) append_csv(csv, kReportHeader, {report_row(report, word.strands(), bs::component_count(word))});
  return kOk;
}

int run_corpus(const std::string& path, bool quiet) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read corpus " << path << '\n';
    return kInputError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const auto entries = bs::parse_corpus(buf.str());
  if (entries.empty()) {
    std::cerr << "warning: corpus " << path << " has no entries\n";
    if (!quiet) std::cout << "0 entries, 0 mismatches\n";
    return kOk;
  }
  std::size_t mismatches = 0;
  for (const auto& e : entries) {
    const auto diffs = bs::check_entry(e);
    mismatches += diffs.size();
    if (!quiet) std::cout << (diffs.empty() ? "PASS " : "FAIL ") << e.name << '\n';
    for (const auto& d : diffs)
      std::cout << "  " << d.key << ": expected " << d.expected << ", got " << d.actual << '\n';
  }
  if (!quiet || mismatches)
    std::cout << entries.size() << " entries, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braided surfaces, slice-Bennequin bounds and sliceness obstructions"};
  app.require_subcommand(1);

  std::string csv;
  bool quiet = false;
  app.add_option("--csv", csv, "Write/append CSV output to this path");
  app.add_flag("--quiet", quiet, "Suppress human-readable output");

  std::string input;
  auto* expand = app.add_subcommand("expand", "Expand a band presentation into a braid word");
  expand->add_option("input", input, "Word 'B<n>: ...' or presentation 'S<n>: ...'")->required();

  std::string name;
  auto* report = app.add_subcommand("report", "Concordance report for a word or presentation");
  report->add_option("input", input, "Word 'B<n>: ...' or presentation 'S<n>: ...'")->required();
  report->add_option("--name", name, "Label used in the report");

  std::string corpus_path = std::string(BRAIDSLICE_CORPUS_DIR) + "/surface_presentations.txt";
  auto* corpus = app.add_subcommand("corpus", "Check a corpus file of expectations");
  corpus->add_option("path", corpus_path, "Corpus file")->capture_default_str();

  std::string family;
  int max = 10;
  bool only_dblstar = false;
  long long tau = 0;
  std::string sign_text;
  std::optional<int> max_iter;
  bool base_sqp = true;
  auto* sweep = app.add_subcommand("sweep", "CSV sweep over the pretzel or double family");
  sweep->add_option("family", family, "pretzel | double")->required()->check(CLI::IsMember({"pretzel", "double"}));
  sweep->add_option("--max", max, "Largest |parameter| (pretzel) or |tau| (double)")->check(CLI::NonNegativeNumber);
  sweep->add_flag("--only-dblstar", only_dblstar, "Keep only pretzels with qr+rp+pq = -1");
  auto* tau_opt = sweep->add_option("--tau", tau, "Twist of the double");
  sweep->add_option("--sign", sign_text, "Sign of the double: + or -");
  sweep->add_option("--max-iter", max_iter, "Iterated untwisted positive doubles D^1..D^N")->check(CLI::NonNegativeNumber);
  sweep->add_flag("--base-sqp,!--no-base-sqp", base_sqp, "Base knot is nontrivial strongly quasipositive");

  std::vector<long long> params;
  auto* pretzel = app.add_subcommand("pretzel", "Report for the odd pretzel knot P(p,q,r)");
  pretzel->add_option("params", params, "p q r")->expected(3)->required()->allow_extra_args(false);

  std::vector<std::string> double_args;
  int iterate = 0;
  bool double_base = true;
  auto* dbl = app.add_subcommand("double", "Report for the double D(K,tau,sign)");
  dbl->add_option("tau_sign", double_args, "tau sign")->expected(2)->required();
  dbl->add_option("--iterate", iterate, "Report D^i(K) instead (requires tau 0, sign +)");
  dbl->add_flag("--base-sqp,!--no-base-sqp", double_base, "Base knot is nontrivial strongly quasipositive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*expand) return run_expand(input);
    if (*report) return run_report(input, name, csv, quiet);
    if (*corpus) return run_corpus(corpus_path, quiet);

    if (*pretzel) {
      const auto pp = bs::make_pretzel(params[0], params[1], params[2]);
      const auto r = bs::pretzel_slice_verdict(pp);
      if (!quiet) std::cout << bs::render_report(r);
      if (!csv.empty()) append_csv(csv, kPretzelHeader, {pretzel_row(pp, r)});
      return kOk;
    }

    if (*dbl) {
      const auto sign = parse_sign(double_args[1]);
      if (!sign) throw std::invalid_argument("sign must be + or -, got '" + double_args[1] + "'");
      const bs::Coeff t = std::stoll(double_args[0]);
      bs::ConcordanceReport r;
      if (iterate > 0) {
        if (t != 0 || *sign != bs::DoubleSign::Positive)
          throw std::invalid_argument("--iterate applies to untwisted positive doubles only");
        r = bs::iterated_double_report(iterate, double_base);
      } else {
        r = bs::double_report(t, *sign, double_base);
      }
      if (!quiet) std::cout << bs::render_report(r);
      if (!csv.empty()) append_csv(csv, kDoubleHeader, {double_row(std::max(iterate, 1), t, *sign, r)});
      return kOk;
    }

    if (*sweep) {
      std::ofstream file;
      if (!csv.empty()) {
        file.open(csv, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open " + csv);
      }
      std::ostream& out = csv.empty() ? std::cout : file;
      if (family == "pretzel") return sweep_pretzel(max, only_dblstar, out, quiet);

      std::optional<bs::DoubleSign> sign;
      if (!sign_text.empty()) {
        sign = parse_sign(sign_text);
        if (!sign) throw std::invalid_argument("sign must be + or -, got '" + sign_text + "'");
      }
      out << kDoubleHeader << '\n';
      if (max_iter) {
        if (tau != 0 || sign.value_or(bs::DoubleSign::Positive) != bs::DoubleSign::Positive)
          throw std::invalid_argument("--max-iter applies to untwisted positive doubles only");
        for (int i = 1; i <= *max_iter; ++i)
          out << double_row(i, 0, bs::DoubleSign::Positive, bs::iterated_double_report(i, base_sqp)) << '\n';
        return kOk;
      }
      std::vector<bs::DoubleSign> signs;
      if (sign) signs = {*sign};
      else signs = {bs::DoubleSign::Positive, bs::DoubleSign::Negative};
      const long long lo = tau_opt->count() ? tau : -max;
      const long long hi = tau_opt->count() ? tau : max;
      for (long long t = lo; t <= hi; ++t)
        for (auto s : signs) out << double_row(1, t, s, bs::double_report(t, s, base_sqp)) << '\n';
      return kOk;
    }
  } catch (const bs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const bs::CorpusError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
