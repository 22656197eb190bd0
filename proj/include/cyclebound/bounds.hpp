#pragma once

#include <cstdint>
#include <optional>

#include "cyclebound/graph.hpp"
#include "cyclebound/spectral.hpp"

namespace cyclebound {

/// Absolute slack used when comparing exact counts against floating bounds.
inline constexpr double kBoundSlack = 1e-9;

/// Trace/Holder bound: 2^{k/2-1} E^{k/2}, divided by k when k is prime.
/// For k = 3 this is (sqrt(2)/3) E^{3/2}.
double holder_cycle_bound(std::uint64_t edges, unsigned k, bool k_is_prime);

/// Multiplier from the zero-trace refinement:
/// ((V-1)^{p-1} - 1) / (V^{p/2} (V-1)^{(p-2)/2}). Equals (V-2)/sqrt(V(V-1))
/// at p = 3. Requires V >= 2 and odd p >= 3.
double refinement_multiplier(std::uint64_t vertices, unsigned p);

/// refinement_multiplier(V,p) * 2^{p/2-1}/p * E^{p/2}.
double refined_cycle_bound(std::uint64_t edges, std::uint64_t vertices, unsigned p);

/// Same bound with the exponents (p+1)/2 and (p-1)/2 in the denominator, as
/// printed in the source statement. Kept only for the discrepancy checks; it
/// is smaller than refined_cycle_bound by sqrt(V(V-1)).
double printed_cycle_bound(std::uint64_t edges, std::uint64_t vertices, unsigned p);

/// max(0, sum lambda^k) / (2k).
double spectral_moment_bound(const Spectrum& s, unsigned k);

bool is_prime(unsigned k);

struct BoundReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  unsigned k = 3;
  std::optional<std::uint64_t> exact;
  double bound_holder = 0.0;
  std::optional<double> bound_refined;  // odd k only
  double bound_spectral = 0.0;
  std::optional<double> tightness;      // exact / min(applicable bounds)

  double min_bound() const;
};

/// Evaluates every applicable bound for cycle length k. When the spectrum is
/// already known it can be passed in to skip the eigensolve.
BoundReport build_report(const Graph& g, unsigned k, bool with_exact,
                         const Spectrum* spectrum = nullptr);

}  // namespace cyclebound
