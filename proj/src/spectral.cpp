#include "cyclebound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "cyclebound/errors.hpp"

namespace cyclebound {

AdjacencyMatrix::AdjacencyMatrix(const Graph& g)
    : order_(g.vertex_count()), entries_(order_ * order_, 0), offsets_(order_ + 1, 0) {
  for (const auto& [u, v] : g.edges()) {
    entries_[u * order_ + v] = 1;
    entries_[v * order_ + u] = 1;
  }
  for (std::size_t i = 0; i < order_; ++i) {
    const auto nb = g.neighbors(static_cast<Vertex>(i));
    offsets_[i + 1] = offsets_[i] + nb.size();
    support_.insert(support_.end(), nb.begin(), nb.end());
  }
}

namespace {

using Dense = std::vector<ExactCount>;

[[noreturn]] void capacity_error(unsigned k) {
  throw CapacityError("trace of A^" + std::to_string(k) +
                      " exceeds the 64-bit unsigned exact-arithmetic width");
}

// next = prev * A, using the sparsity of A: next(i,j) = sum_{l in N(j)} prev(i,l).
// Returns false on overflow.
bool multiply_by_adjacency(const AdjacencyMatrix& a, const Dense& prev, Dense& next) {
  const std::size_t n = a.order();
  bool overflow = false;
#pragma omp parallel for schedule(static) reduction(|| : overflow)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    const ExactCount* prow = prev.data() + i * n;
    ExactCount* nrow = next.data() + i * n;
    for (std::size_t j = 0; j < n && !overflow; ++j) {
      ExactCount acc = 0;
      for (const auto l : a.support(j)) {
        if (__builtin_add_overflow(acc, prow[l], &acc)) {
          overflow = true;
          break;
        }
      }
      nrow[j] = acc;
    }
  }
  return !overflow;
}

}  // namespace

ExactCount trace_power(const AdjacencyMatrix& a, unsigned k) {
  if (k == 0) throw ValidationError("trace_power requires k >= 1");
  const std::size_t n = a.order();
  if (n == 0) return 0;

  // tr(A^k) = sum_ij (A^h)_ij (A^{k-h})_ij for symmetric A, with h = ceil(k/2).
  const unsigned high = (k + 1) / 2;
  const unsigned low = k - high;

  Dense current(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) current[i * n + j] = a(i, j);

  Dense low_power;
  if (low == 0) {
    low_power.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) low_power[i * n + i] = 1;
  } else if (low == 1) {
    low_power = current;
  }
  Dense scratch(n * n);
  for (unsigned j = 2; j <= high; ++j) {
    if (!multiply_by_adjacency(a, current, scratch)) capacity_error(k);
    current.swap(scratch);
    if (j == low) low_power = current;
  }

  std::vector<ExactCount> row_sums(n, 0);
  bool overflow = false;
#pragma omp parallel for schedule(static) reduction(|| : overflow)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    ExactCount row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      ExactCount term = 0;
      if (__builtin_mul_overflow(current[i * n + j], low_power[i * n + j], &term) ||
          __builtin_add_overflow(row_sum, term, &row_sum)) {
        overflow = true;
        break;
      }
    }
    row_sums[i] = row_sum;
  }
  if (overflow) capacity_error(k);

  ExactCount total = 0;
  for (const ExactCount r : row_sums) {
    if (__builtin_add_overflow(total, r, &total)) capacity_error(k);
  }
  return total;
}

namespace serial {

ExactCount trace_power(const AdjacencyMatrix& a, unsigned k) {
  if (k == 0) throw ValidationError("trace_power requires k >= 1");
  const std::size_t n = a.order();
  Dense power(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) power[i * n + j] = a(i, j);
  Dense next(n * n);
  for (unsigned step = 1; step < k; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ExactCount acc = 0;
        for (std::size_t l = 0; l < n; ++l) {
          ExactCount term = 0;
          if (__builtin_mul_overflow(power[i * n + l], static_cast<ExactCount>(a(l, j)), &term) ||
              __builtin_add_overflow(acc, term, &acc)) {
            capacity_error(k);
          }
        }
        next[i * n + j] = acc;
      }
    }
    power.swap(next);
  }
  ExactCount trace = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_add_overflow(trace, power[i * n + i], &trace)) capacity_error(k);
  }
  return trace;
}

}  // namespace serial

double default_eigen_tolerance(std::size_t n) { return 1e-12 * static_cast<double>(std::max<std::size_t>(n, 1)); }

Spectrum eigenvalues(const AdjacencyMatrix& a) { return eigenvalues(a, default_eigen_tolerance(a.order())); }

Spectrum eigenvalues(const AdjacencyMatrix& a, double tol) {
  if (!(tol > 0.0)) throw ValidationError("eigenvalue tolerance must be positive");
  const std::size_t n = a.order();
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
    return std::sqrt(2.0 * s);
  };

  double residual = off_norm();
  int sweep = 0;
  while (residual >= tol) {
    if (sweep == kJacobiSweepLimit) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                                 std::to_string(kJacobiSweepLimit) +
                                 " sweeps; off-diagonal norm " + std::to_string(residual),
                             residual);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Symmetric Schur rotation zeroing (p,q).
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = c * arp - s * arq;
          at(r, q) = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = at(p, r);
          const double aqr = at(q, r);
          at(p, r) = c * apr - s * aqr;
          at(q, r) = s * apr + c * aqr;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
    ++sweep;
    residual = off_norm();
  }

  Spectrum out;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = at(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

double spectral_moment(const Spectrum& s, unsigned k) {
  double sum = 0.0;
  for (const double lambda : s.eigenvalues) sum += std::pow(lambda, static_cast<int>(k));
  return sum;
}

}  // namespace cyclebound
