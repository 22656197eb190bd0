#include "cyclebound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cyclebound/counting.hpp"
#include "cyclebound/errors.hpp"

namespace cyclebound {

namespace {

void require_refinable(std::uint64_t vertices, unsigned p) {
  if (vertices < 2) throw ValidationError("refined bound requires at least 2 vertices");
  if (p < 3 || p % 2 == 0) {
    throw ValidationError("refined bound requires an odd power >= 3, got " + std::to_string(p));
  }
}

double holder_scale(std::uint64_t edges, unsigned p) {
  const double kd = static_cast<double>(p);
  return std::pow(2.0, kd / 2.0 - 1.0) * std::pow(static_cast<double>(edges), kd / 2.0);
}

}  // namespace

bool is_prime(unsigned k) {
  if (k < 2) return false;
  for (unsigned d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

double holder_cycle_bound(std::uint64_t edges, unsigned k, bool k_is_prime) {
  const double base = holder_scale(edges, k);
  return k_is_prime ? base / static_cast<double>(k) : base;
}

double refinement_multiplier(std::uint64_t vertices, unsigned p) {
  require_refinable(vertices, p);
  const double v = static_cast<double>(vertices);
  const double pd = static_cast<double>(p);
  // ((V-1)^{p-1} - 1) / (V^{p/2} (V-1)^{(p-2)/2}), grouped to stay O(1) for large V.
  const double head = (std::pow(v - 1.0, pd - 1.0) - 1.0) / std::pow(v - 1.0, pd - 1.0);
  return head * std::pow((v - 1.0) / v, pd / 2.0);
}

double refined_cycle_bound(std::uint64_t edges, std::uint64_t vertices, unsigned p) {
  return refinement_multiplier(vertices, p) * holder_scale(edges, p) / static_cast<double>(p);
}

double printed_cycle_bound(std::uint64_t edges, std::uint64_t vertices, unsigned p) {
  require_refinable(vertices, p);
  const double v = static_cast<double>(vertices);
  const double pd = static_cast<double>(p);
  const double multiplier = (std::pow(v - 1.0, pd - 1.0) - 1.0) /
                            (std::pow(v, (pd + 1.0) / 2.0) * std::pow(v - 1.0, (pd - 1.0) / 2.0));
  return multiplier * holder_scale(edges, p) / pd;
}

double spectral_moment_bound(const Spectrum& s, unsigned k) {
  if (k < 3) throw ValidationError("cycle length must be at least 3");
  return std::max(0.0, spectral_moment(s, k)) / (2.0 * static_cast<double>(k));
}

double BoundReport::min_bound() const {
  double m = std::min(bound_holder, bound_spectral);
  if (bound_refined) m = std::min(m, *bound_refined);
  return m;
}

BoundReport build_report(const Graph& g, unsigned k, bool with_exact, const Spectrum* spectrum) {
  if (k < 3) throw ValidationError("cycle length must be at least 3");
  BoundReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.k = k;

  Spectrum local;
  if (spectrum == nullptr) {
    local = eigenvalues(adjacency_matrix(g));
    spectrum = &local;
  }

  r.bound_holder = holder_cycle_bound(r.edges, k, is_prime(k));
  if (k % 2 == 1) {
    r.bound_refined = r.vertices >= 2 ? refined_cycle_bound(r.edges, r.vertices, k) : 0.0;
  }
  r.bound_spectral = spectral_moment_bound(*spectrum, k);

  if (with_exact) {
    r.exact = k == 3 ? triangle_count(g) : count_simple_cycles(g, k);
    if (*r.exact == 0) {
      r.tightness = 0.0;
    } else {
      r.tightness = static_cast<double>(*r.exact) / r.min_bound();
    }
  }
  return r;
}

}  // namespace cyclebound
