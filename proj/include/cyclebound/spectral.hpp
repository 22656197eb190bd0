#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclebound/graph.hpp"

namespace cyclebound {

/// Dense symmetric 0/1 adjacency matrix with zero diagonal, row-major.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(const Graph& g);

  std::size_t order() const noexcept { return order_; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  std::span<const std::uint8_t> row(std::size_t i) const {
    return {entries_.data() + i * order_, order_};
  }
  /// Sorted column indices of the nonzero entries of row i.
  std::span<const std::uint32_t> support(std::size_t i) const {
    return {support_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

 private:
  std::size_t order_ = 0;
  std::vector<std::uint8_t> entries_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> support_;
};

inline AdjacencyMatrix adjacency_matrix(const Graph& g) { return AdjacencyMatrix(g); }

/// Width of the exact arithmetic used by trace_power. Any intermediate entry
/// of A^j or partial trace sum above this raises CapacityError.
using ExactCount = std::uint64_t;

/// tr(A^k), the number of closed walks of length k, computed exactly.
/// OpenMP-parallel over matrix rows.
ExactCount trace_power(const AdjacencyMatrix& a, unsigned k);

/// Eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::size_t order() const noexcept { return eigenvalues.size(); }
};

inline constexpr int kJacobiSweepLimit = 100;

/// Default off-diagonal tolerance for eigenvalues(): 1e-12 * n.
double default_eigen_tolerance(std::size_t n);

/// Cyclic Jacobi eigensolver. Stops once the off-diagonal Frobenius norm is
/// below tol; throws ConvergenceError after kJacobiSweepLimit sweeps.
Spectrum eigenvalues(const AdjacencyMatrix& a, double tol);
Spectrum eigenvalues(const AdjacencyMatrix& a);

/// Sum of lambda^k over the spectrum.
double spectral_moment(const Spectrum& s, unsigned k);

namespace serial {

/// Reference implementation: k-1 dense matrix products, single-threaded.
ExactCount trace_power(const AdjacencyMatrix& a, unsigned k);

}  // namespace serial

}  // namespace cyclebound
