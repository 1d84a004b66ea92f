#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dlspec/canonical.hpp"
#include "dlspec/graph.hpp"

namespace dlspec {

// Margin below which a strict inequality is not called either way.
inline constexpr double kStrictThreshold = 1e-6;
// Tolerance for non-strict bounds and residual identities.
inline constexpr double kNumericTol = 1e-8;

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status status);

struct LemmaVerdict {
  std::string lemma;
  std::string instance;
  Status status = Status::Inconclusive;
  // Signed gap backing the claimed inequality; positive supports the claim.
  double margin = 0.0;
  std::vector<std::pair<std::string, double>> residuals;
};

// lambda(g) >= max transmission.
LemmaVerdict check_transmission_bound(const Graph& g);

// lambda(g + uv) <= lambda(g) for a non-edge uv of connected g.
LemmaVerdict check_edge_addition_monotone(const Graph& g, int u, int v);

// lambda strictly grows when the shorter of two pendant paths at u gives a
// vertex to the longer: G_u(k,l) vs G_u(k+1,l-1), k >= l >= 1.
LemmaVerdict check_path_shift(const Graph& g, int u, int k, int l);

// Same shift with the paths at two adjacent vertices u,v whose other
// neighborhoods agree (and are nonempty).
LemmaVerdict check_clique_shift(const Graph& g, int u, int v, int k, int l);

// lambda(H_n) < lambda(Ki_{n,3}), including the transmission formula checks.
LemmaVerdict check_h_vs_kite(int n);

// Every 4-cycle spider on n vertices stays strictly below the kite; one
// aggregated verdict with the worst member recorded.
LemmaVerdict check_c4_family(int n);

// lambda_{n-1}(G) >= n for all connected G of order n, with equality within
// tolerance exactly when the complement is disconnected; n <= 7.
LemmaVerdict check_algebraic_connectivity_analogue(int n);

struct ExtremalResult {
  LemmaVerdict verdict;
  std::string argmax_graph6;
  std::vector<std::pair<std::string, double>> top;  // up to 3 best (graph6, lambda)
  double runner_up_gap = 0.0;
};

// Exhaustive check that the kite uniquely maximizes lambda over all
// unicyclic graphs of order n.
ExtremalResult extremal_search(int n, int ceiling = kDefaultCeiling);

std::vector<LemmaVerdict> sweep_transmission_bound(int n_lo, int n_hi, int ceiling = kDefaultCeiling);
std::vector<LemmaVerdict> sweep_edge_addition(unsigned seed, int trials);
std::vector<LemmaVerdict> sweep_path_shift(int max_total);
std::vector<LemmaVerdict> sweep_clique_shift(int max_total);
std::vector<LemmaVerdict> sweep_h_vs_kite(int n_lo, int n_hi);
std::vector<LemmaVerdict> sweep_c4_family(int n_lo, int n_hi);
std::vector<LemmaVerdict> sweep_extremal(int n_lo, int n_hi, int ceiling = kDefaultCeiling);
std::vector<LemmaVerdict> sweep_lambda_n_minus_1(int n_lo, int n_hi);

// 0 all pass, 1 any fail, 2 inconclusive only.
int exit_code_for(const std::vector<LemmaVerdict>& verdicts);

}  // namespace dlspec
