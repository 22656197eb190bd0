#include "cyclebound/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <string>

#include "cyclebound/errors.hpp"
#include "cyclebound/graph.hpp"

namespace cyclebound {

namespace {

void require_odd_power(std::size_t n, unsigned q) {
  if (n < 2) throw ValidationError("need at least 2 coordinates");
  if (q < 3 || q % 2 == 0) throw ValidationError("power must be odd and >= 3, got " + std::to_string(q));
}

double ipow(double x, unsigned e) {
  double r = 1.0;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void fill_multipliers(ConstrainedOptimum& opt, unsigned q) {
  const auto& x = opt.point.coords;
  double s = 0.0;
  for (const double xi : x) s += ipow(xi, q - 1);
  opt.lambda1 = s / static_cast<double>(x.size());
  opt.lambda2 = power_sum(x, q);
  opt.value = opt.lambda2;
}


// Increase of the Lagrangian f(y) - mu1 sum y - (mu2/2) sum y^2 from b to a,
// with (mu1, mu2) the normal components of grad f at b. Equals the increase
// of f on the feasible set, but rounding drift off the set only enters at
// second order. Uses a^q - b^q = (a - b) sum_j a^j b^{q-1-j} to avoid
// cancellation.
double lagrangian_increase(std::span<const double> a, std::span<const double> b, unsigned q, double mu1,
                           double mu2) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double factor = 0.0;
    double apow = 1.0;
    for (unsigned j = 0; j < q; ++j) {
      factor += apow * ipow(b[i], q - 1 - j);
      apow *= a[i];
    }
    total += (a[i] - b[i]) * (factor - mu1 - 0.5 * mu2 * (a[i] + b[i]));
  }
  return total;
}

ConstrainedOptimum ascend(std::size_t n, unsigned q, std::uint64_t seed, const NumericOptions& opts) {
  constexpr double kArmijo = 1e-4;
  constexpr double kMaxStep = 16.0;
  constexpr int kMaxHalvings = 200;

  ConstrainedOptimum out;
  out.converged = false;
  std::vector<double> x = random_feasible_point(n, seed).coords;
  std::vector<double> trial(n);
  double step = 0.25;

  std::size_t it = 0;
  for (; it < opts.max_iterations; ++it) {
    const auto g = power_sum_gradient(x, q);
    const auto d = project_tangent(x, g);
    const double norm2 = dot(d, d);
    if (std::sqrt(norm2) < opts.tol) {
      out.converged = true;
      break;
    }
    const double mu1 = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(n);
    double mu2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) mu2 += (g[i] - mu1) * x[i];
    mu2 /= dot(x, x);
    bool accepted = false;
    for (int h = 0; h < kMaxHalvings; ++h) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + step * d[i];
      if (retract(trial) && lagrangian_increase(trial, x, q, mu1, mu2) >= kArmijo * step * norm2) {
        x.swap(trial);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    step = std::min(2.0 * step, kMaxStep);
  }
  out.iterations = it;
  out.point.coords = std::move(x);
  fill_multipliers(out, q);
  return out;
}

std::vector<std::uint64_t> restart_seeds(const NumericOptions& opts) {
  SplitMix64 master(opts.seed);
  std::vector<std::uint64_t> seeds(opts.restarts);
  for (auto& s : seeds) s = master.next();
  return seeds;
}

ConstrainedOptimum select_best(std::vector<ConstrainedOptimum> runs, const NumericOptions& opts) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].value > runs[best].value + opts.tol) best = i;
  }
  if (!runs[best].converged) {
    throw ConvergenceError("projected gradient ascent hit the iteration cap; best value so far " +
                               std::to_string(runs[best].value),
                           runs[best].value);
  }
  return std::move(runs[best]);
}

void validate_numeric(std::size_t n, unsigned q, const NumericOptions& opts) {
  require_odd_power(n, q);
  if (opts.restarts < 1) throw ValidationError("need at least one restart");
  if (!(opts.tol > 0.0)) throw ValidationError("tolerance must be positive");
}

}  // namespace

bool is_feasible(const SpherePoint& x, double scale) {
  const auto& c = x.coords;
  const double tol = scale * static_cast<double>(std::max<std::size_t>(c.size(), 1));
  const double sum = std::accumulate(c.begin(), c.end(), 0.0);
  return std::abs(sum) <= tol && std::abs(dot(c, c) - 1.0) <= tol;
}

double power_sum(std::span<const double> x, unsigned q) {
  double s = 0.0;
  for (const double xi : x) s += ipow(xi, q);
  return s;
}

std::vector<double> power_sum_gradient(std::span<const double> x, unsigned q) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = static_cast<double>(q) * ipow(x[i], q - 1);
  return g;
}

std::vector<double> project_tangent(std::span<const double> x, std::span<const double> v) {
  std::vector<double> d(v.begin(), v.end());
  if (d.empty()) return d;
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
  for (double& di : d) di -= mean;
  const double radial = dot(d, x) / dot(x, x);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= radial * x[i];
  return d;
}

bool retract(std::vector<double>& x) {
  if (x.empty()) return false;
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (double& xi : x) xi -= mean;
  const double norm = std::sqrt(dot(x, x));
  if (norm < 1e-12) return false;
  for (double& xi : x) xi /= norm;
  return true;
}

SpherePoint random_feasible_point(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> x(n);
  do {
    for (std::size_t i = 0; i < n; i += 2) {
      // Box-Muller pair.
      const double u1 = 1.0 - rng.uniform();
      const double u2 = rng.uniform();
      const double r = std::sqrt(-2.0 * std::log(u1));
      x[i] = r * std::cos(2.0 * std::numbers::pi * u2);
      if (i + 1 < n) x[i + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
    }
  } while (!retract(x));
  return SpherePoint{std::move(x)};
}

double closed_form_value(std::size_t n, unsigned q) {
  require_odd_power(n, q);
  const double nd = static_cast<double>(n);
  const double qd = static_cast<double>(q);
  return (std::pow(nd - 1.0, qd - 1.0) - 1.0) /
         (std::pow(nd, qd / 2.0) * std::pow(nd - 1.0, (qd - 2.0) / 2.0));
}

ConstrainedOptimum closed_form_max(std::size_t n, unsigned q) {
  require_odd_power(n, q);
  const double nd = static_cast<double>(n);
  ConstrainedOptimum opt;
  opt.point.coords.assign(n, -std::sqrt(1.0 / ((nd - 1.0) * nd)));
  opt.point.coords[0] = std::sqrt((nd - 1.0) / nd);
  fill_multipliers(opt, q);
  opt.value = closed_form_value(n, q);
  return opt;
}

std::vector<TwoLevelCandidate> enumerate_two_level(std::size_t n, unsigned q) {
  if (n < 2) throw ValidationError("need at least 2 coordinates");
  if (q < 3) throw ValidationError("power must be >= 3");
  const double nd = static_cast<double>(n);
  std::vector<TwoLevelCandidate> out;
  out.reserve(n - 1);
  for (std::size_t n1 = 1; n1 < n; ++n1) {
    TwoLevelCandidate c;
    c.n1 = n1;
    c.n2 = n - n1;
    const double a = static_cast<double>(c.n1);
    const double b = static_cast<double>(c.n2);
    c.alpha1 = std::sqrt(b / (a * nd));
    c.alpha2 = -std::sqrt(a / (b * nd));
    c.value = a * ipow(c.alpha1, q) + b * ipow(c.alpha2, q);
    out.push_back(c);
  }
  return out;
}

ConstrainedOptimum numeric_max(std::size_t n, unsigned q, const NumericOptions& opts) {
  validate_numeric(n, q, opts);
  const auto seeds = restart_seeds(opts);
  std::vector<ConstrainedOptimum> runs(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(seeds.size()); ++i) {
    runs[static_cast<std::size_t>(i)] = ascend(n, q, seeds[static_cast<std::size_t>(i)], opts);
  }
  return select_best(std::move(runs), opts);
}

namespace serial {

ConstrainedOptimum numeric_max(std::size_t n, unsigned q, const NumericOptions& opts) {
  validate_numeric(n, q, opts);
  const auto seeds = restart_seeds(opts);
  std::vector<ConstrainedOptimum> runs;
  runs.reserve(seeds.size());
  for (const auto s : seeds) runs.push_back(ascend(n, q, s, opts));
  return select_best(std::move(runs), opts);
}

}  // namespace serial

double lagrange_residual(const SpherePoint& x, unsigned q) {
  const auto& c = x.coords;
  const double n = static_cast<double>(c.size());
  double sx = 0.0, sxx = 0.0, sy = 0.0, sxy = 0.0;
  std::vector<double> y(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    y[i] = ipow(c[i], q - 1);
    sx += c[i];
    sxx += c[i] * c[i];
    sy += y[i];
    sxy += c[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) return 0.0;
  const double l1 = (sy * sxx - sx * sxy) / det;
  const double l2 = (n * sxy - sx * sy) / det;
  double worst = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) worst = std::max(worst, std::abs(y[i] - l1 - l2 * c[i]));
  return worst;
}

}  // namespace cyclebound
