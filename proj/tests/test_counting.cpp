#include <doctest.h>

#include "cyclebound/counting.hpp"
#include "cyclebound/errors.hpp"
#include "cyclebound/spectral.hpp"
#include "oracles.hpp"

using namespace cyclebound;

namespace {

std::uint64_t complete_cycles(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r / (2 * k);
}

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("triangle counts") {
    CHECK(triangle_count(complete_graph(5)) == 10);
    for (unsigned n = 1; n <= 15; ++n) {
      CHECK(triangle_count(complete_graph(n)) == static_cast<Count>(n) * (n - 1) * (n ? n - 2 : 0) / 6);
    }
    CHECK(triangle_count(path_graph(7)) == 0);
    CHECK(triangle_count(star_graph(6)) == 0);
    CHECK(triangle_count(cycle_graph(6)) == 0);
    CHECK(triangle_count(Graph()) == 0);
  }

  TEST_CASE("simple cycle examples") {
    CHECK(count_simple_cycles(complete_graph(5), 5) == 12);
    CHECK(count_simple_cycles(complete_graph(4), 3) == 4);
    CHECK(count_simple_cycles(paw_graph(), 5) == 0);
    CHECK(count_simple_cycles(cycle_graph(7), 7) == 1);
    CHECK(count_simple_cycles(complete_graph(4), 4) == 3);
    CHECK_THROWS_AS(count_simple_cycles(complete_graph(4), 2), ValidationError);
  }

  TEST_CASE("complete-graph cycle formula") {
    for (unsigned n = 3; n <= 8; ++n)
      for (unsigned k = 3; k <= n; ++k) CHECK(count_simple_cycles(complete_graph(n), k) == complete_cycles(n, k));
  }

  TEST_CASE("simple cycles against the permutation oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Graph g = gnp_random(3 + seed % 5, 0.6, seed + 100);
      for (unsigned k = 3; k <= 7; ++k) CHECK(count_simple_cycles(g, k) == oracle::simple_cycles(g, k));
      CHECK(triangle_count(g) == oracle::triangles(g));
    }
  }

  TEST_CASE("simple cycle work guard") {
    CHECK_THROWS_AS(count_simple_cycles(complete_graph(30), 10), ResourceError);
    CHECK(count_simple_cycles(complete_graph(3), 9) == 0);  // k > V short-circuits
  }

  TEST_CASE("closed walk classes") {
    CHECK(closed_walk_class_count(complete_graph(3), 3) == 1);
    CHECK(closed_walk_class_count(parse_edge_list("0 1"), 2) == 1);
    CHECK(closed_walk_class_count(complete_graph(4), 3) == 4);
    CHECK(closed_walk_class_count(complete_graph(4), 1) == 0);
    // Rotation-only classes keep the two orientations of a triangle apart.
    CHECK(closed_walk_class_count(complete_graph(3), 3, WalkEquivalence::kRotation) == 2);
    CHECK(closed_walk_class_count(complete_graph(4), 3, WalkEquivalence::kRotation) == 8);
  }

  TEST_CASE("closed walk classes against the set-based oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Graph g = gnp_random(2 + seed % 5, 0.5, seed + 7);
      for (unsigned k = 2; k <= 6; ++k) {
        CHECK(closed_walk_class_count(g, k, WalkEquivalence::kDihedral) == oracle::walk_classes(g, k, true));
        CHECK(closed_walk_class_count(g, k, WalkEquivalence::kRotation) == oracle::walk_classes(g, k, false));
      }
    }
  }

  TEST_CASE("closed walk size guard") {
    CHECK_THROWS_AS(closed_walk_class_count(complete_graph(9), 8), ResourceError);
    CHECK_NOTHROW(closed_walk_class_count(complete_graph(8), 8));
  }

  TEST_CASE("walk sandwich: rotation classes satisfy both sides, reflection classes only the upper") {
    bool dihedral_lower_failed = false;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const Graph g = gnp_random(2 + seed % 5, 0.5, seed);
      const AdjacencyMatrix a(g);
      for (unsigned k = 3; k <= 6; ++k) {
        const auto t = trace_power(a, k);
        const auto rot = closed_walk_class_count(g, k, WalkEquivalence::kRotation);
        const auto dih = closed_walk_class_count(g, k, WalkEquivalence::kDihedral);
        CHECK(t <= k * rot);
        CHECK(2 * rot <= t);
        CHECK(2 * dih <= t);
        CHECK(t <= 2 * k * dih);
        if (t > k * dih) dihedral_lower_failed = true;
      }
    }
    CHECK(dihedral_lower_failed);
  }

  TEST_CASE("average triangles per edge") {
    CHECK(avg_triangles_per_edge(complete_graph(4)) == Rational(2));
    CHECK(avg_triangles_per_edge(complete_graph(5)) == Rational(3));
    CHECK(avg_triangles_per_edge(star_graph(5)) == Rational(0));
    CHECK_THROWS_AS(avg_triangles_per_edge(parse_edge_list("n 3")), UndefinedAverageError);
  }

  TEST_CASE("triangles-per-edge ceiling") {
    auto r = compopt_check(complete_graph(4));
    CHECK(r.n_min == 4);
    CHECK(r.bound == 2);
    CHECK(r.average == Rational(2));
    CHECK(r.holds);
    CHECK(r.equality);

    r = compopt_check(path_graph(3));
    CHECK(r.n_min == 3);
    CHECK(r.bound == 1);
    CHECK(r.average == Rational(0));
    CHECK(r.holds);
    CHECK_FALSE(r.equality);

    std::vector<Edge> edges;
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = u + 1; v < 5; ++v)
        if (!(u == 3 && v == 4)) edges.emplace_back(u, v);
    const Graph k5_minus(5, edges);
    CHECK(oracle::triangles(k5_minus) == 7);
    r = compopt_check(k5_minus);
    CHECK(r.n_min == 5);
    CHECK(r.bound == 3);
    CHECK(r.average == Rational(7, 3));
    CHECK(r.holds);
    CHECK_FALSE(r.equality);
  }

  TEST_CASE("minimum vertices for an edge count") {
    CHECK(min_vertices_for_edges(1) == 2);
    CHECK(min_vertices_for_edges(3) == 3);
    CHECK(min_vertices_for_edges(4) == 4);
    CHECK(min_vertices_for_edges(6) == 4);
    CHECK(min_vertices_for_edges(7) == 5);
    for (std::uint64_t n = 2; n < 2000; ++n) {
      CHECK(min_vertices_for_edges(n * (n - 1) / 2) == static_cast<std::int64_t>(n));
      CHECK(min_vertices_for_edges(n * (n - 1) / 2 + 1) == static_cast<std::int64_t>(n + 1));
    }
  }

  TEST_CASE("exhaustive: triangles-per-edge equality exactly on complete graphs (V <= 5)") {
    for (unsigned v = 2; v <= 5; ++v) {
      const std::uint64_t masks = 1ULL << (v * (v - 1) / 2);
      for (std::uint64_t m = 1; m < masks; ++m) {
        const Graph g = graph_from_mask(v, m);
        const auto r = compopt_check(g);
        CHECK(r.holds);
        CHECK(r.equality == is_complete_on_support(g));
      }
    }
  }

  TEST_CASE("rational ordering and normalization") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(7, 3) < Rational(3));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK_THROWS_AS(Rational(1, 0), ValidationError);
  }
}
