#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cyclebound {

// Maximization of sum x_i^q on the slice {sum x_i = 0, sum x_i^2 = 1} of the
// unit sphere. The exponent q is the power itself (q = 2p+1 for odd powers);
// for cycle bounds q is the cycle length.

struct SpherePoint {
  std::vector<double> coords;
};

/// Feasibility within 1e-12 * n on both constraints.
bool is_feasible(const SpherePoint& x, double scale = 1e-12);

struct TwoLevelCandidate {
  std::size_t n1 = 0;  // coordinates at alpha1 > 0
  std::size_t n2 = 0;  // coordinates at alpha2 < 0
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double value = 0.0;
};

struct ConstrainedOptimum {
  SpherePoint point;
  double value = 0.0;
  double lambda1 = 0.0;  // sum x^{q-1} / n
  double lambda2 = 0.0;  // sum x^q
  bool converged = true;
  std::size_t iterations = 0;
};

double power_sum(std::span<const double> x, unsigned q);
/// Analytic gradient q x_i^{q-1}.
std::vector<double> power_sum_gradient(std::span<const double> x, unsigned q);

/// Closed-form maximizer: one coordinate at sqrt((n-1)/n), the rest at
/// -1/sqrt(n(n-1)). Requires n >= 2 and odd q >= 3.
ConstrainedOptimum closed_form_max(std::size_t n, unsigned q);

/// ((n-1)^{q-1} - 1) / (n^{q/2} (n-1)^{(q-2)/2}).
double closed_form_value(std::size_t n, unsigned q);

/// One candidate per n1 in 1..n-1 with alpha1^2 = n2/(n1 n), alpha2^2 = n1/(n2 n).
std::vector<TwoLevelCandidate> enumerate_two_level(std::size_t n, unsigned q);

struct NumericOptions {
  std::uint64_t seed = 0;
  std::size_t restarts = 30;
  double tol = 1e-10;                   // projected-gradient norm
  std::size_t max_iterations = 200000;  // per restart
};

/// Best of `restarts` projected gradient ascents from pinned random starts.
/// Ties within tol keep the earliest restart. Throws ConvergenceError when the
/// selected restart did not reach tol.
ConstrainedOptimum numeric_max(std::size_t n, unsigned q, const NumericOptions& opts);

/// Max absolute residual of the least-squares fit x_i^{q-1} ~ l1 + l2 x_i.
double lagrange_residual(const SpherePoint& x, unsigned q);

/// Projection of v onto the tangent space of the slice at x.
std::vector<double> project_tangent(std::span<const double> x, std::span<const double> v);

/// Mean-centers and renormalizes. Returns false for a degenerate vector.
bool retract(std::vector<double>& x);

/// Pinned random feasible point (Gaussian draw, centered, normalized).
SpherePoint random_feasible_point(std::size_t n, std::uint64_t seed);

namespace serial {

ConstrainedOptimum numeric_max(std::size_t n, unsigned q, const NumericOptions& opts);

}  // namespace serial

}  // namespace cyclebound
