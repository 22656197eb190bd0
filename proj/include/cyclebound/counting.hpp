#pragma once

#include <cstdint>
#include <map>

#include "cyclebound/graph.hpp"
#include "cyclebound/rational.hpp"

namespace cyclebound {

using Count = std::uint64_t;

/// Exact simple-cycle counts keyed by cycle length (k >= 3).
struct CycleCounts {
  std::map<unsigned, Count> by_length;
};

/// Triangles via sorted-neighbor intersection on forward edges u<v<w.
Count triangle_count(const Graph& g);

/// Work estimate k * V^k above which count_simple_cycles refuses to run.
inline constexpr double kSimpleCycleWorkLimit = 1e11;

/// Simple cycles with exactly k distinct vertices, each counted once. A cycle
/// is emitted from its minimum vertex with second vertex < last vertex.
Count count_simple_cycles(const Graph& g, unsigned k);

/// Equivalence used to group closed walks.
enum class WalkEquivalence {
  kDihedral,  // rotations and reflections (2k symmetries)
  kRotation,  // rotations only (k symmetries)
};

/// Limit on V^k for closed-walk enumeration.
inline constexpr double kClosedWalkWorkLimit = 16777216.0;  // 8^8

/// Number of closed k-walks up to the chosen equivalence. A class is counted
/// through its lexicographically minimal representative.
Count closed_walk_class_count(const Graph& g, unsigned k,
                              WalkEquivalence eq = WalkEquivalence::kDihedral);

/// 3T/E as an exact fraction. Throws UndefinedAverageError when E = 0.
Rational avg_triangles_per_edge(const Graph& g);

struct CompoptResult {
  std::int64_t n_min = 0;  // smallest n with E <= n(n-1)/2
  std::int64_t bound = 0;  // n_min - 2
  Rational average;
  bool holds = false;
  bool equality = false;
};

/// Average triangles per edge against the n_min - 2 ceiling.
CompoptResult compopt_check(const Graph& g);

/// Smallest n with e <= n(n-1)/2.
std::int64_t min_vertices_for_edges(std::uint64_t e);

namespace serial {

Count triangle_count(const Graph& g);
Count count_simple_cycles(const Graph& g, unsigned k);
Count closed_walk_class_count(const Graph& g, unsigned k, WalkEquivalence eq);

}  // namespace serial

}  // namespace cyclebound
