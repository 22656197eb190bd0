// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cyclebound/bounds.hpp"
#include "cyclebound/counting.hpp"
#include "cyclebound/extremal.hpp"
#include "cyclebound/spectral.hpp"
#include "cyclebound/verify.hpp"

using namespace cyclebound;

namespace {

struct Outcome {
  bool pass = false;
  std::string evidence;
};

std::vector<Graph> all_graphs_up_to(unsigned max_v) {
  std::vector<Graph> out;
  for (unsigned v = 1; v <= max_v; ++v) {
    const std::uint64_t masks = 1ULL << (v * (v - 1) / 2);
    for (std::uint64_t m = 0; m < masks; ++m) out.push_back(graph_from_mask(v, m));
  }
  return out;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

const std::vector<Graph>& sweep6() {
  static const std::vector<Graph> graphs = all_graphs_up_to(6);
  return graphs;
}

// Pinned corpus of G(n,p) graphs with n <= 12.
const std::vector<Graph>& corpus() {
  static const std::vector<Graph> graphs = random_corpus(20261015);
  return graphs;
}

Outcome trace_identities() {
  std::size_t bad = 0;
  for (const auto& g : sweep6()) {
    const AdjacencyMatrix a(g);
    if (trace_power(a, 1) != 0 || trace_power(a, 2) != 2 * g.edge_count() ||
        trace_power(a, 3) != 6 * triangle_count(g)) {
      ++bad;
    }
  }
  return {bad == 0, fmt("%.0f graphs, %.0f violations", double(sweep6().size()), double(bad))};
}

Outcome triangle_sharpness() {
  double worst_refined = 0.0, worst_ratio = 0.0;
  for (unsigned n = 3; n <= 12; ++n) {
    const Graph kn = complete_graph(n);
    const auto t = static_cast<double>(triangle_count(kn));
    const double refined = refined_cycle_bound(kn.edge_count(), n, 3);
    const double ratio = t / holder_cycle_bound(kn.edge_count(), 3, true);
    worst_refined = std::max(worst_refined, std::abs(t - refined) / refined);
    worst_ratio = std::max(worst_ratio, std::abs(ratio - (n - 2.0) / std::sqrt(n * (n - 1.0))));
  }
  return {worst_refined <= 1e-9 && worst_ratio <= 1e-9,
          fmt("max rel gap to refined %.3g, max ratio gap %.3g (tol 1e-9)", worst_refined, worst_ratio)};
}

Outcome complete_spectrum() {
  double worst = 0.0;
  for (unsigned n = 3; n <= 50; ++n) {
    const auto s = eigenvalues(AdjacencyMatrix(complete_graph(n)));
    worst = std::max(worst, std::abs(s.eigenvalues[0] - (n - 1.0)));
    for (std::size_t i = 1; i < n; ++i) worst = std::max(worst, std::abs(s.eigenvalues[i] + 1.0));
  }
  return {worst <= 1e-8, fmt("max eigenvalue error %.3g (tol 1e-8), n = 3..50", worst)};
}

Outcome triangles_per_edge() {
  std::vector<Graph> graphs = sweep6();
  for (unsigned n = 2; n <= 12; ++n) graphs.push_back(complete_graph(n));
  std::size_t checked = 0, violations = 0, equalities = 0, wrong_equality = 0;
  for (const auto& g : graphs) {
    if (g.edge_count() == 0) continue;
    ++checked;
    const auto r = compopt_check(g);
    if (!r.holds) ++violations;
    if (r.equality) ++equalities;
    if (r.equality != is_complete_on_support(g)) ++wrong_equality;
  }
  return {violations == 0 && wrong_equality == 0,
          fmt("%.0f graphs, %.0f violations, %.0f equality cases", double(checked), double(violations),
              double(equalities)) +
              fmt(", %.0f equality cases on non-complete graphs", double(wrong_equality))};
}

Outcome odd_power_maximizer() {
  double worst_gap = 0.0, worst_excess = -1.0, worst_residual = 0.0, worst_grad = 0.0;
  for (unsigned q : {3U, 5U, 7U}) {
    for (std::size_t n = 3; n <= 8; ++n) {
      NumericOptions opts;
      opts.seed = 7919 * q + n;
      opts.restarts = 30;
      const auto numeric = numeric_max(n, q, opts);
      const auto closed = closed_form_max(n, q);
      worst_gap = std::max(worst_gap, std::abs(numeric.value - closed.value));
      worst_excess = std::max(worst_excess, numeric.value - closed.value);
      worst_residual = std::max(worst_residual, lagrange_residual(closed.point, q));

      auto x = random_feasible_point(n, opts.seed).coords;
      const auto g = power_sum_gradient(x, q);
      double err2 = 0.0, norm2 = 0.0;
      constexpr double h = 1e-6;
      for (std::size_t j = 0; j < n; ++j) {
        auto up = x, down = x;
        up[j] += h;
        down[j] -= h;
        const double fd = (power_sum(up, q) - power_sum(down, q)) / (2 * h);
        err2 += (fd - g[j]) * (fd - g[j]);
        norm2 += g[j] * g[j];
      }
      worst_grad = std::max(worst_grad, std::sqrt(err2 / norm2));
    }
  }
  const bool pass = worst_gap <= 1e-6 && worst_excess <= 1e-9 && worst_residual < 1e-10 && worst_grad <= 1e-5;
  return {pass, fmt("max |numeric - closed| %.3g (tol 1e-6), max excess %.3g (tol 1e-9), ", worst_gap,
                    worst_excess) +
                    fmt("max Lagrange residual %.3g (tol 1e-10), max gradient rel error %.3g (tol 1e-5)",
                        worst_residual, worst_grad)};
}

Outcome bound_chain() {
  std::size_t chain_bad = 0;
  for (const auto& g : corpus()) {
    const auto t = static_cast<double>(triangle_count(g));
    const double refined = refined_cycle_bound(g.edge_count(), g.vertex_count(), 3);
    if (!(t <= refined + kBoundSlack && refined <= holder_cycle_bound(g.edge_count(), 3, true) + kBoundSlack)) {
      ++chain_bad;
    }
  }
  std::size_t c5_checked = 0, c5_bad = 0;
  auto check_c5 = [&](const Graph& g) {
    if (g.vertex_count() > 8) return;
    ++c5_checked;
    const auto c5 = static_cast<double>(count_simple_cycles(g, 5));
    if (c5 > spectral_moment_bound(eigenvalues(AdjacencyMatrix(g)), 5) + kBoundSlack) ++c5_bad;
  };
  for (const auto& g : sweep6()) check_c5(g);
  for (const auto& g : corpus()) check_c5(g);
  return {chain_bad == 0 && c5_bad == 0,
          fmt("%.0f G(n,p) graphs, %.0f chain violations; ", double(corpus().size()), double(chain_bad)) +
              fmt("C_5 <= moment bound on %.0f graphs with V <= 8, %.0f violations", double(c5_checked),
                  double(c5_bad))};
}

Outcome documented_discrepancies() {
  // (a) paw graph: C_5 = 0 but tr A^5 > 0.
  const Graph paw = paw_graph();
  const auto paw_trace = trace_power(AdjacencyMatrix(paw), 5);
  const bool a = count_simple_cycles(paw, 5) == 0 && paw_trace > 0;
  // (b) K_5: C_5 = 12 while the moment bound is (4^5 - 4)/10 = 102.
  const Graph k5 = complete_graph(5);
  const double moment = spectral_moment_bound(eigenvalues(AdjacencyMatrix(k5)), 5);
  const bool b = count_simple_cycles(k5, 5) == 12 && std::abs(moment - 102.0) <= 1e-9 * 102.0 &&
                 std::abs(refined_cycle_bound(10, 5, 5) - 102.0) <= 1e-9 * 102.0;
  // (c) printed constant at p = 3: off by sqrt(V(V-1)), exceeded by T(K_n) for n >= 4.
  bool c = true;
  for (std::uint64_t n = 4; n <= 12; ++n) {
    const Graph kn = complete_graph(n);
    const double printed = printed_cycle_bound(kn.edge_count(), n, 3);
    const double refined = refined_cycle_bound(kn.edge_count(), n, 3);
    c = c && std::abs(refined / printed - std::sqrt(double(n) * (n - 1.0))) <= 1e-9 * refined / printed;
    c = c && static_cast<double>(triangle_count(kn)) > printed;
  }
  // The verify suite must flag all three in the same direction.
  VerifyOptions opts;
  opts.max_vertices = 4;
  const auto report = run_verify(opts);
  std::size_t flagged = 0;
  for (const auto& chk : report.checks) {
    if ((chk.name == "prime_cycle_trace_identity_p5" || chk.name == "prime_cycle_bound_equality_k5" ||
         chk.name == "printed_prime_cycle_constant") &&
        chk.expectation == Expectation::kDocumentedDiscrepancy && chk.as_expected()) {
      ++flagged;
    }
  }
  return {a && b && c && flagged == 3,
          fmt("(a) tr A^5(paw) = %.0f vs C_5 = 0; (b) moment bound %.6g vs C_5(K_5) = 12; ", double(paw_trace),
              moment) +
              std::string("(c) ") + (c ? "confirmed" : "not confirmed") +
              fmt("; verify flags %.0f/3", double(flagged))};
}

Outcome walk_sandwich() {
  std::size_t bad = 0, cases = 0, dihedral_lower_fail = 0;
  for (const auto& g : sweep6()) {
    const AdjacencyMatrix a(g);
    for (unsigned k = 3; k <= 6; ++k, ++cases) {
      const auto t = trace_power(a, k);
      const auto classes = closed_walk_class_count(g, k, WalkEquivalence::kRotation);
      if (!(t <= k * classes && 2 * classes <= t)) ++bad;
      if (t > k * closed_walk_class_count(g, k, WalkEquivalence::kDihedral)) ++dihedral_lower_fail;
    }
  }
  return {bad == 0, fmt("%.0f (graph, k) cases, %.0f violations (rotation classes); ", double(cases), double(bad)) +
                        fmt("lower bound fails for reflection classes in %.0f cases", double(dihedral_lower_fail))};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "trace identities, all graphs on <= 6 vertices", trace_identities},
      {"AC2", "triangle bound sharpness on K_3..K_12", triangle_sharpness},
      {"AC3", "spectrum of K_3..K_50", complete_spectrum},
      {"AC4", "triangles per edge <= n_min - 2, equality exactly on complete graphs", triangles_per_edge},
      {"AC5", "odd-power maximizer: numeric vs closed form, stationarity, gradient", odd_power_maximizer},
      {"AC6", "bound chain on pinned G(n,p); C_5 spectral bound", bound_chain},
      {"AC7", "documented discrepancies hold in the stated direction", documented_discrepancies},
      {"AC8", "closed-walk class sandwich, V <= 6, k = 3..6", walk_sandwich},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s %s -- %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.evidence.c_str(), secs);
    if (!o.pass) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
