#include "dlspec/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dlspec/canonical.hpp"
#include "dlspec/enumeration.hpp"
#include "dlspec/families.hpp"
#include "dlspec/graph6.hpp"
#include "dlspec/lemmas.hpp"
#include "dlspec/report.hpp"
#include "dlspec/spectra.hpp"

namespace dlspec {

namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

int parse_int_strict(const std::string& text, const std::string& what) {
  int value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    fail(ErrorKind::ParseError, "bad " + what + " '" + text + "'");
  return value;
}

// "6..9" or a single "7".
Range parse_range(const std::string& text) {
  const std::size_t pos = text.find("..");
  Range r;
  if (pos == std::string::npos) {
    r.lo = r.hi = parse_int_strict(text, "range");
  } else {
    r.lo = parse_int_strict(text.substr(0, pos), "range start");
    r.hi = parse_int_strict(text.substr(pos + 2), "range end");
  }
  if (r.lo > r.hi) fail(ErrorKind::ParseError, "empty range '" + text + "'");
  return r;
}

int ceiling_from_env() {
  const char* raw = std::getenv("DLSPEC_CEILING");
  if (raw == nullptr) return kDefaultCeiling;
  const int value = parse_int_strict(raw, "DLSPEC_CEILING");
  if (value < 3 || value > kMaxCeiling)
    fail(ErrorKind::ParseError,
         "DLSPEC_CEILING must be between 3 and " + std::to_string(kMaxCeiling));
  return value;
}

void write_text(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::IoError, "cannot open " + path);
  file << content;
  if (!file) fail(ErrorKind::IoError, "write to " + path + " failed");
}

std::string table_number(double x) {
  if (std::isfinite(x)) return format_number(x);
  return x > 0 ? "inf" : "-inf";
}

Graph graph_from_input(const std::string& family, const std::string& graph6) {
  if (family.empty() == graph6.empty())
    fail(ErrorKind::ParseError, "need exactly one input: a family spec or --graph6");
  if (!graph6.empty()) return decode_graph6(graph6);
  return FamilySpec::parse(family).build().first;
}

int run_spectrum(const std::string& family, const std::string& graph6, const std::string& format,
                 const std::string& out_path, std::ostream& out) {
  const Graph g = graph_from_input(family, graph6);
  const Spectrum s = graph_spectrum(g);
  const auto tr = apsp(g).transmissions;
  std::string text;
  if (format == "json") {
    text = "{\"n\":" + std::to_string(g.order());
    text += ",\"graph6\":\"" + escape_json(encode_graph6(g)) + "\"";
    text += ",\"transmissions\":[";
    for (int v = 0; v < g.order(); ++v) {
      if (v > 0) text += ",";
      text += std::to_string(tr(v));
    }
    text += "],";
    text += spectrum_json(s).substr(1);
    text += "\n";
  } else if (format == "csv") {
    text = matrix_csv(distance_laplacian(g));
  } else if (format == "table") {
    std::ostringstream line;
    line << "n: " << g.order() << "\n";
    line << "graph6: " << encode_graph6(g) << "\n";
    line << "transmissions:";
    for (int v = 0; v < g.order(); ++v) line << " " << tr(v);
    line << "\n";
    line << "eigenvalues:";
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i)
      line << " " << format_number(s.eigenvalues(i));
    line << "\n";
    line << "radius: " << format_number(s.eigenvalues(0)) << "\n";
    line << "residual: " << format_number(s.residual) << "\n";
    text = line.str();
  } else {
    fail(ErrorKind::ParseError, "spectrum format must be table, json, or csv");
  }
  write_text(out_path, text, out);
  return 0;
}

std::vector<LemmaVerdict> run_lemma(const std::string& lemma, const std::string& n_range,
                                    unsigned seed, int trials, int max_total, int ceiling) {
  const auto range = [&](int lo, int hi) {
    return n_range.empty() ? Range{lo, hi} : parse_range(n_range);
  };
  if (lemma == "bound") {
    const Range r = range(3, 7);
    return sweep_transmission_bound(r.lo, r.hi, ceiling);
  }
  if (lemma == "edge-add") return sweep_edge_addition(seed, trials);
  if (lemma == "path-shift") return sweep_path_shift(max_total > 0 ? max_total : 8);
  if (lemma == "clique-shift") return sweep_clique_shift(max_total > 0 ? max_total : 6);
  if (lemma == "dl1") {
    const Range r = range(6, 9);
    return sweep_h_vs_kite(r.lo, r.hi);
  }
  if (lemma == "dl2") {
    const Range r = range(4, 10);
    return sweep_c4_family(r.lo, r.hi);
  }
  if (lemma == "theorem") {
    const Range r = range(3, 8);
    return sweep_extremal(r.lo, r.hi, ceiling);
  }
  if (lemma == "lambda-n-1") {
    const Range r = range(3, 6);
    return sweep_lambda_n_minus_1(r.lo, r.hi);
  }
  fail(ErrorKind::UnknownLemma,
       "unknown lemma '" + lemma +
           "'; expected bound, edge-add, path-shift, clique-shift, dl1, dl2, theorem, lambda-n-1");
}

int run_verify(const std::string& lemma, const std::string& n_range, unsigned seed, int trials,
               int max_total, double threshold, const std::string& format,
               const std::string& out_path, int ceiling, std::ostream& out) {
  auto verdicts = run_lemma(lemma, n_range, seed, trials, max_total, ceiling);
  if (threshold > 0.0) {
    // Override of the strict-inequality threshold; never upgrades a FAIL.
    for (auto& v : verdicts) {
      if (v.status == Status::Fail) continue;
      v.status = v.margin > threshold   ? Status::Pass
                 : v.margin < -threshold ? Status::Fail
                                         : Status::Inconclusive;
    }
  }
  std::string text;
  if (format == "json") {
    for (const auto& v : verdicts) text += verdict_json(v) + "\n";
  } else if (format == "table") {
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto& v : verdicts) min_margin = std::min(min_margin, v.margin);
    Status overall = Status::Pass;
    for (const auto& v : verdicts) {
      if (v.status == Status::Fail) overall = Status::Fail;
      if (v.status == Status::Inconclusive && overall == Status::Pass)
        overall = Status::Inconclusive;
    }
    std::ostringstream line;
    line << std::left << std::setw(14) << "lemma" << std::setw(11) << "instances" << std::setw(18)
         << "min_margin" << "status\n";
    line << std::left << std::setw(14) << lemma << std::setw(11) << verdicts.size()
         << std::setw(18) << table_number(min_margin) << to_string(overall) << "\n";
    for (const auto& v : verdicts)
      if (v.status != Status::Pass)
        line << "  " << v.instance << ": " << to_string(v.status)
             << " margin=" << table_number(v.margin) << "\n";
    text = line.str();
  } else {
    fail(ErrorKind::ParseError, "verify format must be table or json");
  }
  write_text(out_path, text, out);
  return exit_code_for(verdicts);
}

int run_enumerate(int n, int shards, const std::string& format, const std::string& out_path,
                  int ceiling, std::ostream& out, std::ostream& err) {
  const EnumerationReport report = partitioned_enumerate(n, shards, ceiling);
  if (format == "count") {
    write_text(out_path, std::to_string(report.count) + "\n", out);
    return 0;
  }
  if (format == "json") {
    write_text(out_path, enumeration_json(report) + "\n", out);
    return 0;
  }
  if (format != "graph6")
    fail(ErrorKind::ParseError, "enumerate format must be graph6, json, or count");
  std::string lines;
  for (const auto& g6 : report.graphs) lines += g6 + "\n";
  write_text(out_path, lines, out);
  if (out_path.empty())
    err << report.count << " graphs\n";
  else
    out << report.count << " graphs\n";
  return 0;
}

int run_plotdata(const std::string& n_range, const std::string& out_path, int ceiling,
                 std::ostream& out) {
  if (n_range.empty()) fail(ErrorKind::ParseError, "plotdata needs --n lo..hi");
  const Range r = parse_range(n_range);
  if (r.lo < 3) fail(ErrorKind::BadOrder, "plotdata needs n >= 3");
  std::string csv = "n,lambda_kite,lambda_h,lambda_cycle_closed_form,submatrix_bound,"
                    "max_over_enumeration\n";
  for (int n = r.lo; n <= r.hi; ++n) {
    csv += std::to_string(n) + ",";
    csv += format_number(spectral_radius(make_kite(n).first)) + ",";
    if (n >= 6) csv += format_number(spectral_radius(make_h_graph(n).first));
    csv += ",";
    csv += format_number(cycle_radius_closed_form(n)) + ",";
    if (n >= 4) csv += format_number(kite_submatrix_bound(n));
    csv += ",";
    double best = 0.0;
    for (const auto& g6 : enumerate_unicyclic(n, ceiling).graphs)
      best = std::max(best, spectral_radius(decode_graph6(g6)));
    csv += format_number(best) + "\n";
  }
  write_text(out_path, csv, out);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"distance Laplacian spectra of connected graphs, with extremal checks"};
  app.require_subcommand(1);

  std::string sp_family, sp_graph6, sp_format = "table", sp_out;
  std::string vf_lemma, vf_range, vf_format = "table", vf_out;
  std::string en_format = "graph6", en_out;
  std::string pd_range, pd_out;
  unsigned seed = 7;
  int trials = 200, max_total = 0, shards = 1, n = 0;
  double threshold = 0.0;

  auto* sp = app.add_subcommand("spectrum", "distance Laplacian eigendecomposition of one graph");
  sp->add_option("input", sp_family, "family spec, e.g. kite:n=6 or c4spider:2,1,0,0");
  sp->add_option("--graph6", sp_graph6, "graph6 string instead of a family spec");
  sp->add_option("--format", sp_format, "table, json, or csv (distance Laplacian)");
  sp->add_option("--out", sp_out, "write to file instead of stdout");

  auto* vf = app.add_subcommand("verify", "run a lemma suite and report verdicts");
  vf->add_option("lemma", vf_lemma,
                 "bound, edge-add, path-shift, clique-shift, dl1, dl2, theorem, lambda-n-1")
      ->required();
  vf->add_option("--n", vf_range, "order range lo..hi (default depends on the lemma)");
  vf->add_option("--seed", seed, "seed for the edge-add suite");
  vf->add_option("--trials", trials, "trial count for the edge-add suite");
  vf->add_option("--max-total", max_total, "largest k+l for the shift suites");
  vf->add_option("--threshold", threshold, "override the strict-inequality threshold");
  vf->add_option("--format", vf_format, "table or json (JSON-lines verdicts)");
  vf->add_option("--out", vf_out, "write to file instead of stdout");

  auto* en = app.add_subcommand("enumerate", "all unicyclic graphs of an order, one per class");
  en->add_option("--n", n, "graph order")->required();
  en->add_option("--shards", shards, "parallel shards; output is shard-independent");
  en->add_option("--format", en_format, "graph6, json, or count");
  en->add_option("--out", en_out, "write graph6 lines to file");

  auto* pd = app.add_subcommand("plotdata", "CSV of radii and bounds across an order range");
  pd->add_option("--n", pd_range, "order range lo..hi")->required();
  pd->add_option("--out", pd_out, "write to file instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("dlspec");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    const int ceiling = ceiling_from_env();
    if (sp->parsed()) return run_spectrum(sp_family, sp_graph6, sp_format, sp_out, out);
    if (vf->parsed())
      return run_verify(vf_lemma, vf_range, seed, trials, max_total, threshold, vf_format, vf_out,
                        ceiling, out);
    if (en->parsed()) return run_enumerate(n, shards, en_format, en_out, ceiling, out, err);
    return run_plotdata(pd_range, pd_out, ceiling, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace dlspec
