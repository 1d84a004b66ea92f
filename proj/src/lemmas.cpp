#include "dlspec/lemmas.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "dlspec/enumeration.hpp"
#include "dlspec/families.hpp"
#include "dlspec/graph6.hpp"
#include "dlspec/spectra.hpp"

namespace dlspec {

namespace {

Status strict_status(double margin) {
  if (margin > kStrictThreshold) return Status::Pass;
  if (margin < -kStrictThreshold) return Status::Fail;
  return Status::Inconclusive;
}

Status nonstrict_status(double margin) {
  return margin >= -kNumericTol ? Status::Pass : Status::Fail;
}

// uniform value in [0, bound); plain modulo reduction of the raw engine
// output keeps the stream identical across standard libraries.
int draw(std::mt19937& rng, int bound) { return static_cast<int>(rng() % bound); }

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

LemmaVerdict check_transmission_bound(const Graph& g) {
  const double lambda = spectral_radius(g);
  const double tr_max = max_transmission(g);
  LemmaVerdict v;
  v.lemma = "bound";
  v.instance = encode_graph6(g);
  v.margin = lambda - tr_max;
  v.status = nonstrict_status(v.margin);
  v.residuals = {{"lambda", lambda}, {"tr_max", tr_max}};
  return v;
}

LemmaVerdict check_edge_addition_monotone(const Graph& g, int u, int v) {
  if (!is_connected(g)) fail(ErrorKind::Disconnected, "base graph must be connected");
  const Graph grown = add_edge(g, u, v);
  const double before = spectral_radius(g);
  const double after = spectral_radius(grown);
  LemmaVerdict verdict;
  verdict.lemma = "edge-add";
  verdict.instance = encode_graph6(g) + "+{" + std::to_string(std::min(u, v)) + "," +
                     std::to_string(std::max(u, v)) + "}";
  verdict.margin = before - after;
  verdict.status = nonstrict_status(verdict.margin);
  verdict.residuals = {{"lambda_before", before}, {"lambda_after", after}};
  return verdict;
}

LemmaVerdict check_path_shift(const Graph& g, int u, int k, int l) {
  if (k < l || l < 1) fail(ErrorKind::BadParams, "path shift needs k >= l >= 1");
  const double shorter = spectral_radius(attach_two_paths(g, u, k, l));
  const double longer = spectral_radius(attach_two_paths(g, u, k + 1, l - 1));
  LemmaVerdict v;
  v.lemma = "path-shift";
  v.instance = encode_graph6(g) + " u=" + std::to_string(u) + " k=" + std::to_string(k) +
               " l=" + std::to_string(l);
  v.margin = longer - shorter;
  v.status = strict_status(v.margin);
  v.residuals = {{"lambda_k_l", shorter}, {"lambda_k1_l1", longer}};
  return v;
}

LemmaVerdict check_clique_shift(const Graph& g, int u, int v, int k, int l) {
  if (!g.has_edge(u, v))
    fail(ErrorKind::PreconditionViolated, "clique shift anchors must be adjacent");
  const Graph stripped = remove_edge(g, u, v);
  const auto& nu = stripped.neighbors(u);
  const auto& nv = stripped.neighbors(v);
  if (nu.empty() || nu != nv)
    fail(ErrorKind::PreconditionViolated,
         "anchors must share every neighbor besides each other, nonempty");
  if (k < l || l < 1) fail(ErrorKind::BadParams, "clique shift needs k >= l >= 1");
  const double shorter = spectral_radius(attach_at_two_vertices(g, u, v, k, l));
  const double longer = spectral_radius(attach_at_two_vertices(g, u, v, k + 1, l - 1));
  LemmaVerdict verdict;
  verdict.lemma = "clique-shift";
  verdict.instance = encode_graph6(g) + " u=" + std::to_string(u) + " v=" + std::to_string(v) +
                     " k=" + std::to_string(k) + " l=" + std::to_string(l);
  verdict.margin = longer - shorter;
  verdict.status = strict_status(verdict.margin);
  verdict.residuals = {{"lambda_k_l", shorter}, {"lambda_k1_l1", longer}};
  return verdict;
}

LemmaVerdict check_h_vs_kite(int n) {
  const auto [h, h_roles] = make_h_graph(n);
  const double lambda_h = spectral_radius(h);
  const double lambda_kite = spectral_radius(make_kite(n).first);
  const auto tr = apsp(h).transmissions;
  LemmaVerdict v;
  v.lemma = "dl1";
  v.instance = "n=" + std::to_string(n);
  v.margin = lambda_kite - lambda_h;
  v.status = strict_status(v.margin);
  v.residuals = {
      {"lambda_h", lambda_h},
      {"lambda_kite", lambda_kite},
      {"tr_w_far_delta", tr(h_roles.at("w" + std::to_string(n - 4))) - (n * n - n - 8) / 2.0},
      {"tr_w1_delta", tr(h_roles.at("w1")) - (n * n - 9 * n + 32) / 2.0},
      {"tr_u1_delta", tr(h_roles.at("u1")) - (n * n - 7 * n + 24) / 2.0},
      {"tr_u2_delta", tr(h_roles.at("u2")) - (n * n - 5 * n + 20) / 2.0},
  };
  for (std::size_t i = 2; i < v.residuals.size(); ++i)
    if (v.residuals[i].second != 0.0) v.status = Status::Fail;
  return v;
}

LemmaVerdict check_c4_family(int n) {
  if (n < 4) fail(ErrorKind::BadOrder, "4-cycle spiders need at least 4 vertices");
  const double lambda_kite = spectral_radius(make_kite(n).first);
  double worst_lambda = -1.0;
  std::array<int, 4> worst{};
  int members = 0;
  const int total = n - 4;
  for (int l1 = 0; l1 <= total; ++l1)
    for (int l2 = 0; l2 + l1 <= total; ++l2)
      for (int l3 = 0; l3 + l2 + l1 <= total; ++l3) {
        const int l4 = total - l1 - l2 - l3;
        const std::array<int, 4> legs{l1, l2, l3, l4};
        // One representative per dihedral orbit of the leg tuple.
        bool minimal = true;
        for (int rot = 0; rot < 4 && minimal; ++rot) {
          std::array<int, 4> other;
          for (int i = 0; i < 4; ++i) other[i] = legs[(i + rot) % 4];
          if (rot > 0 && other < legs) minimal = false;
          std::reverse(other.begin(), other.end());
          if (other < legs) minimal = false;
        }
        if (!minimal) continue;
        ++members;
        const double lambda = spectral_radius(make_c4_spider(l1, l2, l3, l4).first);
        if (lambda > worst_lambda) {
          worst_lambda = lambda;
          worst = legs;
        }
      }
  LemmaVerdict v;
  v.lemma = "dl2";
  v.instance = "n=" + std::to_string(n) + " worst=c4spider:" + std::to_string(worst[0]) + "," +
               std::to_string(worst[1]) + "," + std::to_string(worst[2]) + "," +
               std::to_string(worst[3]);
  v.margin = lambda_kite - worst_lambda;
  v.status = strict_status(v.margin);
  v.residuals = {{"lambda_kite", lambda_kite},
                 {"lambda_worst_member", worst_lambda},
                 {"members", static_cast<double>(members)}};
  return v;
}

LemmaVerdict check_algebraic_connectivity_analogue(int n) {
  if (n < 3 || n > 7)
    fail(ErrorKind::TooLarge, "sweep supports 3 <= n <= 7, got " + std::to_string(n));
  double min_strict_gap = std::numeric_limits<double>::infinity();
  double max_equality_residual = 0.0;
  double min_bound_margin = std::numeric_limits<double>::infinity();
  int classes = 0;
  for (const auto& g6 : connected_graphs_up_to_iso(n)) {
    const Graph g = decode_graph6(g6);
    ++classes;
    const double second = graph_spectrum(g).eigenvalues(n - 2);
    min_bound_margin = std::min(min_bound_margin, second - n);
    if (is_connected(complement(g))) {
      min_strict_gap = std::min(min_strict_gap, second - n);
    } else {
      max_equality_residual = std::max(max_equality_residual, std::abs(second - n));
    }
  }
  LemmaVerdict v;
  v.lemma = "lambda-n-1";
  v.instance = "n=" + std::to_string(n);
  v.margin = min_strict_gap;
  const bool equality_ok = max_equality_residual <= kNumericTol;
  const bool bound_ok = min_bound_margin >= -kNumericTol;
  const Status gap_status = strict_status(min_strict_gap);
  if (!equality_ok || !bound_ok || gap_status == Status::Fail)
    v.status = Status::Fail;
  else
    v.status = gap_status;
  v.residuals = {{"classes", static_cast<double>(classes)},
                 {"min_gap_connected_complement", min_strict_gap},
                 {"max_residual_disconnected_complement", max_equality_residual},
                 {"min_bound_margin", min_bound_margin}};
  return v;
}

ExtremalResult extremal_search(int n, int ceiling) {
  const auto report = enumerate_unicyclic(n, ceiling);
  const auto [kite, kite_roles] = make_kite(n);
  const std::string kite_cert = canonical_form(kite, ceiling).bytes;

  std::vector<std::pair<double, std::string>> scored;
  scored.reserve(report.count);
  for (const auto& g6 : report.graphs)
    scored.emplace_back(spectral_radius(decode_graph6(g6)), g6);
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  ExtremalResult out;
  out.argmax_graph6 = scored.front().second;
  for (std::size_t i = 0; i < scored.size() && i < 3; ++i)
    out.top.emplace_back(scored[i].second, scored[i].first);
  out.runner_up_gap = scored.size() > 1 ? scored[0].first - scored[1].first
                                        : std::numeric_limits<double>::infinity();

  const bool argmax_is_kite = out.argmax_graph6 == kite_cert;
  LemmaVerdict& v = out.verdict;
  v.lemma = "theorem";
  v.instance = "n=" + std::to_string(n);
  v.margin = out.runner_up_gap;
  if (!argmax_is_kite)
    v.status = Status::Fail;
  else
    v.status = scored.size() == 1 ? Status::Pass : strict_status(out.runner_up_gap);
  v.residuals = {{"classes", static_cast<double>(report.count)},
                 {"lambda_max", scored.front().first},
                 {"argmax_is_kite", argmax_is_kite ? 1.0 : 0.0}};
  if (scored.size() > 1) v.residuals.emplace_back("lambda_second", scored[1].first);
  return out;
}

std::vector<LemmaVerdict> sweep_transmission_bound(int n_lo, int n_hi, int ceiling) {
  std::vector<LemmaVerdict> out;
  for (int n = n_lo; n <= n_hi; ++n)
    for (const auto& g6 : enumerate_unicyclic(n, ceiling).graphs)
      out.push_back(check_transmission_bound(decode_graph6(g6)));
  return out;
}

std::vector<LemmaVerdict> sweep_edge_addition(unsigned seed, int trials) {
  if (trials < 1) fail(ErrorKind::BadParams, "need at least one trial");
  std::mt19937 rng(seed);
  std::vector<LemmaVerdict> out;
  out.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    const int n = 3 + draw(rng, 7);
    std::vector<int> code(n - 2);
    for (int& c : code) c = draw(rng, n);
    const Graph tree = prufer_to_tree(code);
    std::vector<Graph::Edge> non_edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!tree.has_edge(u, v)) non_edges.emplace_back(u, v);
    const auto [u, v] = non_edges[draw(rng, static_cast<int>(non_edges.size()))];
    out.push_back(check_edge_addition_monotone(tree, u, v));
  }
  return out;
}

std::vector<LemmaVerdict> sweep_path_shift(int max_total) {
  if (max_total < 2) fail(ErrorKind::BadParams, "need k + l >= 2");
  const Graph triangle = make_cycle(3);
  std::vector<LemmaVerdict> out;
  for (int total = 2; total <= max_total; ++total)
    for (int l = 1; l <= total / 2; ++l) out.push_back(check_path_shift(triangle, 0, total - l, l));
  return out;
}

std::vector<LemmaVerdict> sweep_clique_shift(int max_total) {
  if (max_total < 2) fail(ErrorKind::BadParams, "need k + l >= 2");
  std::vector<LemmaVerdict> out;
  for (const Graph& base : {make_cycle(3), make_complete(4)})
    for (int total = 2; total <= max_total; ++total)
      for (int l = 1; l <= total / 2; ++l)
        out.push_back(check_clique_shift(base, 0, 1, total - l, l));
  return out;
}

std::vector<LemmaVerdict> sweep_h_vs_kite(int n_lo, int n_hi) {
  std::vector<LemmaVerdict> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(check_h_vs_kite(n));
  return out;
}

std::vector<LemmaVerdict> sweep_c4_family(int n_lo, int n_hi) {
  std::vector<LemmaVerdict> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(check_c4_family(n));
  return out;
}

std::vector<LemmaVerdict> sweep_extremal(int n_lo, int n_hi, int ceiling) {
  std::vector<LemmaVerdict> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(extremal_search(n, ceiling).verdict);
  return out;
}

std::vector<LemmaVerdict> sweep_lambda_n_minus_1(int n_lo, int n_hi) {
  std::vector<LemmaVerdict> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(check_algebraic_connectivity_analogue(n));
  return out;
}

int exit_code_for(const std::vector<LemmaVerdict>& verdicts) {
  bool inconclusive = false;
  for (const auto& v : verdicts) {
    if (v.status == Status::Fail) return 1;
    if (v.status == Status::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

}  // namespace dlspec
