#include "cyclebound/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "cyclebound/errors.hpp"

namespace cyclebound {

namespace {

Check make_check(std::string name, std::string anchor, Expectation e, bool held, double lhs, double rhs,
                 double tol, std::string detail = {}) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.expectation = e;
  c.relation_held = held;
  c.lhs = lhs;
  c.rhs = rhs;
  c.tolerance = tol;
  c.detail = std::move(detail);
  return c;
}

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

AnalysisReport analyze(const Graph& g, const std::string& source, const AnalyzeOptions& opts) {
  for (const unsigned k : opts.lengths) {
    if (k < 3) throw ValidationError("cycle lengths must be >= 3, got " + std::to_string(k));
  }
  AnalysisReport r;
  r.source = source;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  if (r.vertices > 0) {
    r.degree_min = r.vertices;
    for (Vertex v = 0; v < r.vertices; ++v) {
      r.degree_min = std::min(r.degree_min, degree(g, v));
      r.degree_max = std::max(r.degree_max, degree(g, v));
    }
  }

  const AdjacencyMatrix a(g);
  const Spectrum spectrum = eigenvalues(a);
  if (opts.include_spectrum) r.spectrum = spectrum;

  std::vector<unsigned> lengths = opts.lengths;
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  for (const unsigned k : {1U, 2U, 3U}) r.traces[k] = trace_power(a, k);
  for (const unsigned k : lengths) r.traces[k] = trace_power(a, k);

  const Count triangles = triangle_count(g);
  auto& checks = r.checks;
  const auto E = static_cast<double>(r.edges);
  checks.push_back(make_check("zero_trace", "tr A = 0", Expectation::kHolds, r.traces[1] == 0,
                              static_cast<double>(r.traces[1]), 0.0, 0.0));
  checks.push_back(make_check("edge_trace", "tr A^2 = 2E", Expectation::kHolds, r.traces[2] == 2 * r.edges,
                              static_cast<double>(r.traces[2]), 2.0 * E, 0.0));
  checks.push_back(make_check("triangle_trace", "tr A^3 = 6T", Expectation::kHolds, r.traces[3] == 6 * triangles,
                              static_cast<double>(r.traces[3]), 6.0 * static_cast<double>(triangles), 0.0));
  const double scaled_tol = opts.tol * static_cast<double>(std::max<std::size_t>(1, r.vertices));
  const double m1 = spectral_moment(spectrum, 1);
  const double m2 = spectral_moment(spectrum, 2);
  checks.push_back(make_check("spectral_sum_zero", "sum of eigenvalues = tr A = 0", Expectation::kHolds,
                              std::abs(m1) <= scaled_tol, m1, 0.0, scaled_tol));
  checks.push_back(make_check("spectral_square_sum", "sum of squared eigenvalues = 2E", Expectation::kHolds,
                              std::abs(m2 - 2.0 * E) <= scaled_tol, m2, 2.0 * E, scaled_tol));

  for (const unsigned k : lengths) {
    BoundReport b = build_report(g, k, opts.exact, &spectrum);
    const double trace = static_cast<double>(r.traces[k]);
    const std::string ks = std::to_string(k);
    const double moment = spectral_moment(spectrum, k);
    checks.push_back(make_check("spectral_moment_k" + ks, "tr A^k = sum lambda^k", Expectation::kHolds,
                                close_rel(moment, trace, opts.tol), moment, trace, opts.tol,
                                "relative to max(1, tr A^k)"));
    if (b.exact) {
      r.counts.by_length[k] = *b.exact;
      const double exact = static_cast<double>(*b.exact);
      checks.push_back(make_check("walk_cycle_inequality_k" + ks, "2k C_k <= tr A^k", Expectation::kHolds,
                                  2.0 * k * exact <= trace, 2.0 * k * exact, trace, 0.0));
      if (is_prime(k)) {
        // Equality is an identity for triangles only; longer prime cycles
        // are overcounted by walks that revisit vertices.
        checks.push_back(make_check("eqp_equality_k" + ks, "tr A^p = 2p C_p for prime p",
                                    k == 3 ? Expectation::kHolds : Expectation::kDocumentedDiscrepancy,
                                    r.traces[k] == 2ULL * k * *b.exact, trace, 2.0 * k * exact, 0.0));
      }
      checks.push_back(make_check("bound_holds_k" + ks, "exact count <= every bound", Expectation::kHolds,
                                  exact <= b.min_bound() + kBoundSlack, exact, b.min_bound(), kBoundSlack));
      if (k == 3 && r.vertices >= 2 && r.edges == r.vertices * (r.vertices - 1) / 2) {
        checks.push_back(make_check("compest_equality", "T(K_n) equals the refined triangle bound",
                                    Expectation::kHolds, close_rel(exact, *b.bound_refined, opts.tol), exact,
                                    *b.bound_refined, opts.tol));
      }
    }
    r.bounds.push_back(std::move(b));
  }

  if (r.edges > 0) {
    const auto t2 = compopt_check(g);
    Check c = make_check("triangles_per_edge", "average triangles per edge <= n_min - 2", Expectation::kHolds,
                         t2.holds, t2.average.to_double(), static_cast<double>(t2.bound), 0.0,
                         "average " + t2.average.str() + ", n_min " + std::to_string(t2.n_min) +
                             (t2.equality ? ", equality" : ""));
    checks.push_back(std::move(c));
  }
  return r;
}

nlohmann::ordered_json to_json(const Check& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["anchor"] = c.anchor;
  j["expectation"] = to_string(c.expectation);
  j["relation_held"] = c.relation_held;
  j["as_expected"] = c.as_expected();
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["tolerance"] = c.tolerance;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = "analyze";
  j["graph"] = {{"source", r.source},
                {"vertices", r.vertices},
                {"edges", r.edges},
                {"degree_min", r.degree_min},
                {"degree_max", r.degree_max}};
  if (r.spectrum) j["spectrum"] = r.spectrum->eigenvalues;
  auto& traces = j["traces"] = nlohmann::ordered_json::object();
  for (const auto& [k, t] : r.traces) traces[std::to_string(k)] = t;
  auto& counts = j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [k, c] : r.counts.by_length) counts[std::to_string(k)] = c;
  auto& bounds = j["bounds"] = nlohmann::ordered_json::array();
  for (const auto& b : r.bounds) {
    nlohmann::ordered_json jb;
    jb["k"] = b.k;
    jb["exact"] = b.exact ? nlohmann::ordered_json(*b.exact) : nlohmann::ordered_json(nullptr);
    jb["bound_holder"] = b.bound_holder;
    jb["bound_refined"] = optional_number(b.bound_refined);
    jb["bound_printed"] = (b.k % 2 == 1 && b.vertices >= 2)
                              ? nlohmann::ordered_json(printed_cycle_bound(b.edges, b.vertices, b.k))
                              : nlohmann::ordered_json(nullptr);
    jb["bound_spectral"] = b.bound_spectral;
    jb["tightness"] = optional_number(b.tightness);
    bounds.push_back(std::move(jb));
  }
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return j;
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = "verify";
  j["max_v"] = r.options.max_vertices;
  j["seed"] = r.options.seed;
  j["passed"] = r.all_as_expected();
  std::size_t unexpected = 0;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back(to_json(c));
    if (!c.as_expected()) ++unexpected;
  }
  j["summary"] = {{"total", r.checks.size()}, {"unexpected", unexpected}};
  return j;
}

std::string to_csv(const std::vector<AnalysisReport>& reports) {
  std::ostringstream os;
  os << "graph,vertices,edges,k,exact,bound_holder,bound_refined,bound_printed,bound_spectral,tightness\n";
  for (const auto& r : reports) {
    for (const auto& b : r.bounds) {
      os << r.source << ',' << r.vertices << ',' << r.edges << ',' << b.k << ',';
      if (b.exact) os << *b.exact;
      os << ',' << format_double(b.bound_holder) << ',';
      if (b.bound_refined) os << format_double(*b.bound_refined);
      os << ',';
      if (b.k % 2 == 1 && b.vertices >= 2) os << format_double(printed_cycle_bound(b.edges, b.vertices, b.k));
      os << ',' << format_double(b.bound_spectral) << ',';
      if (b.tightness) os << format_double(*b.tightness);
      os << '\n';
    }
  }
  return os.str();
}

ExtremalReport extremal(std::size_t n, unsigned q, std::size_t restarts, std::uint64_t seed) {
  ExtremalReport r;
  r.n = n;
  r.q = q;
  r.closed_form = closed_form_max(n, q);
  r.closed_form_residual = lagrange_residual(r.closed_form.point, q);
  r.candidates = enumerate_two_level(n, q);
  r.restarts = restarts;
  r.seed = seed;
  if (restarts > 0) {
    NumericOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    r.numeric = numeric_max(n, q, opts);
  }
  return r;
}

nlohmann::ordered_json to_json(const ExtremalReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = "extremal";
  j["n"] = r.n;
  j["q"] = r.q;
  j["closed_form"] = {{"value", r.closed_form.value},
                      {"point", r.closed_form.point.coords},
                      {"lambda1", r.closed_form.lambda1},
                      {"lambda2", r.closed_form.lambda2},
                      {"lagrange_residual", r.closed_form_residual}};
  auto& table = j["two_level"] = nlohmann::ordered_json::array();
  for (const auto& c : r.candidates) {
    table.push_back({{"n1", c.n1}, {"n2", c.n2}, {"alpha1", c.alpha1}, {"alpha2", c.alpha2}, {"value", c.value}});
  }
  if (r.numeric) {
    j["numeric"] = {{"restarts", r.restarts},
                    {"seed", r.seed},
                    {"value", r.numeric->value},
                    {"point", r.numeric->point.coords},
                    {"iterations", r.numeric->iterations},
                    {"delta", std::abs(r.numeric->value - r.closed_form.value)}};
  } else {
    j["numeric"] = nullptr;
  }
  return j;
}

}  // namespace cyclebound
