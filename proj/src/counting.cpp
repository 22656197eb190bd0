#include "cyclebound/counting.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cyclebound/errors.hpp"

namespace cyclebound {

namespace {

Count forward_triangles_at(const Graph& g, Vertex u) {
  Count count = 0;
  const auto nu = g.neighbors(u);
  for (const Vertex v : nu) {
    if (v <= u) continue;
    const auto nv = g.neighbors(v);
    // |{w > v : w in N(u) and w in N(v)}| by merging the sorted lists.
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        if (*a > v) ++count;
        ++a;
        ++b;
      }
    }
  }
  return count;
}

void check_cycle_work(const Graph& g, unsigned k) {
  const double work = static_cast<double>(k) * std::pow(static_cast<double>(g.vertex_count()), k);
  if (work > kSimpleCycleWorkLimit) {
    throw ResourceError("simple-cycle enumeration for k=" + std::to_string(k) + " on " +
                        std::to_string(g.vertex_count()) + " vertices exceeds the work limit");
  }
}

// Depth-first extension of a path that started at `start`; only vertices
// greater than `start` may join, so `start` is the cycle minimum.
class CycleWalker {
 public:
  CycleWalker(const Graph& g, unsigned k, Vertex start)
      : g_(g), k_(k), start_(start), on_path_(g.vertex_count(), 0) {
    path_.reserve(k);
  }

  Count run() {
    path_.push_back(start_);
    on_path_[start_] = 1;
    extend();
    return found_;
  }

 private:
  void extend() {
    const Vertex tail = path_.back();
    if (path_.size() == k_) {
      if (path_[1] < tail && g_.adjacent(tail, start_)) ++found_;
      return;
    }
    for (const Vertex next : g_.neighbors(tail)) {
      if (next <= start_ || on_path_[next]) continue;
      path_.push_back(next);
      on_path_[next] = 1;
      extend();
      on_path_[next] = 0;
      path_.pop_back();
    }
  }

  const Graph& g_;
  unsigned k_;
  Vertex start_;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
  Count found_ = 0;
};

bool is_minimal_representative(const std::vector<Vertex>& w, WalkEquivalence eq) {
  const std::size_t k = w.size();
  for (std::size_t r = 1; r < k; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex other = w[(r + i) % k];
      if (other < w[i]) return false;
      if (other > w[i]) break;
    }
  }
  if (eq == WalkEquivalence::kDihedral) {
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t i = 0; i < k; ++i) {
        const Vertex other = w[(r + k - i) % k];
        if (other < w[i]) return false;
        if (other > w[i]) break;
      }
    }
  }
  return true;
}

// Closed walks whose first vertex is also their minimum; counts those that are
// the lexicographically least member of their class.
class WalkClassWalker {
 public:
  WalkClassWalker(const Graph& g, unsigned k, Vertex start, WalkEquivalence eq)
      : g_(g), k_(k), start_(start), eq_(eq) {
    walk_.reserve(k);
  }

  Count run() {
    walk_.push_back(start_);
    extend();
    return found_;
  }

 private:
  void extend() {
    const Vertex tail = walk_.back();
    if (walk_.size() == k_) {
      if (g_.adjacent(tail, start_) && is_minimal_representative(walk_, eq_)) ++found_;
      return;
    }
    for (const Vertex next : g_.neighbors(tail)) {
      if (next < start_) continue;
      walk_.push_back(next);
      extend();
      walk_.pop_back();
    }
  }

  const Graph& g_;
  unsigned k_;
  Vertex start_;
  WalkEquivalence eq_;
  std::vector<Vertex> walk_;
  Count found_ = 0;
};

void check_walk_work(const Graph& g, unsigned k) {
  if (std::pow(static_cast<double>(g.vertex_count()), k) > kClosedWalkWorkLimit) {
    throw ResourceError("closed-walk enumeration for k=" + std::to_string(k) + " on " +
                        std::to_string(g.vertex_count()) + " vertices exceeds the size guard");
  }
}

}  // namespace

Count triangle_count(const Graph& g) {
  const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
  Count total = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (std::ptrdiff_t u = 0; u < n; ++u) total += forward_triangles_at(g, static_cast<Vertex>(u));
  return total;
}

Count count_simple_cycles(const Graph& g, unsigned k) {
  if (k < 3) throw ValidationError("cycle length must be at least 3");
  if (k > g.vertex_count()) return 0;
  check_cycle_work(g, k);
  const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
  Count total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::ptrdiff_t s = 0; s < n; ++s) total += CycleWalker(g, k, static_cast<Vertex>(s)).run();
  return total;
}

Count closed_walk_class_count(const Graph& g, unsigned k, WalkEquivalence eq) {
  if (k < 1) throw ValidationError("walk length must be at least 1");
  if (k == 1) return 0;  // loopless
  check_walk_work(g, k);
  const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
  Count total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::ptrdiff_t s = 0; s < n; ++s) total += WalkClassWalker(g, k, static_cast<Vertex>(s), eq).run();
  return total;
}

std::int64_t min_vertices_for_edges(std::uint64_t e) {
  auto n = static_cast<std::int64_t>(std::floor(std::sqrt(2.0 * static_cast<double>(e))));
  while (n > 0 && static_cast<std::uint64_t>((n - 1) * (n - 2) / 2) >= e) --n;
  while (static_cast<std::uint64_t>(n * (n - 1) / 2) < e) ++n;
  return n;
}

Rational avg_triangles_per_edge(const Graph& g) {
  if (g.edge_count() == 0) {
    throw UndefinedAverageError("average triangles per edge is undefined for an edgeless graph");
  }
  return Rational(3 * static_cast<std::int64_t>(triangle_count(g)),
                  static_cast<std::int64_t>(g.edge_count()));
}

CompoptResult compopt_check(const Graph& g) {
  CompoptResult r;
  r.average = avg_triangles_per_edge(g);
  r.n_min = min_vertices_for_edges(g.edge_count());
  r.bound = r.n_min - 2;
  r.holds = r.average <= Rational(r.bound);
  r.equality = r.average == Rational(r.bound);
  return r;
}

namespace serial {

Count triangle_count(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Count total = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (Vertex w = v + 1; w < n; ++w)
        if (g.adjacent(u, w) && g.adjacent(v, w)) ++total;
    }
  return total;
}

Count count_simple_cycles(const Graph& g, unsigned k) {
  if (k < 3) throw ValidationError("cycle length must be at least 3");
  if (k > g.vertex_count()) return 0;
  check_cycle_work(g, k);
  Count total = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) total += CycleWalker(g, k, s).run();
  return total;
}

Count closed_walk_class_count(const Graph& g, unsigned k, WalkEquivalence eq) {
  if (k < 1) throw ValidationError("walk length must be at least 1");
  if (k == 1) return 0;
  check_walk_work(g, k);
  Count total = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) total += WalkClassWalker(g, k, s, eq).run();
  return total;
}

}  // namespace serial

}  // namespace cyclebound
