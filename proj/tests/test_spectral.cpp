#include <doctest.h>

#include <cmath>

#include "cyclebound/counting.hpp"
#include "cyclebound/errors.hpp"
#include "cyclebound/spectral.hpp"
#include "oracles.hpp"

using namespace cyclebound;

TEST_SUITE("spectral") {
  TEST_CASE("adjacency matrix entries") {
    const AdjacencyMatrix tri(complete_graph(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(tri(i, j) == (i != j ? 1 : 0));

    const AdjacencyMatrix empty(parse_edge_list("n 4"));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(empty(i, j) == 0);

    const AdjacencyMatrix path(path_graph(3));
    CHECK(path(0, 1) == 1);
    CHECK(path(1, 2) == 1);
    CHECK(path(0, 2) == 0);
    CHECK(path(2, 0) == 0);
  }

  TEST_CASE("trace powers of K4 and K5") {
    const AdjacencyMatrix k4(complete_graph(4));
    CHECK(trace_power(k4, 2) == 12);
    CHECK(trace_power(k4, 3) == 24);
    const AdjacencyMatrix k5(complete_graph(5));
    CHECK(trace_power(k5, 5) == 1020);
    CHECK(oracle::closed_walks(complete_graph(5), 5) == 1020);
    CHECK(trace_power(k5, 5) == static_cast<ExactCount>(std::pow(4, 5) - 4));
  }

  TEST_CASE("trace power agrees with walk enumeration") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Graph g = gnp_random(2 + seed % 6, 0.5, seed);
      const AdjacencyMatrix a(g);
      for (unsigned k = 1; k <= 6; ++k) CHECK(trace_power(a, k) == oracle::closed_walks(g, k));
    }
  }

  TEST_CASE("trace power edge cases") {
    CHECK_THROWS_AS(trace_power(AdjacencyMatrix(complete_graph(3)), 0), ValidationError);
    CHECK(trace_power(AdjacencyMatrix(Graph()), 4) == 0);
  }

  TEST_CASE("trace power overflow is a capacity error") {
    // tr A^k for K_200 is about 199^k; 199^9 overflows 64 bits.
    const AdjacencyMatrix big(complete_graph(200));
    // Spectrum {199, -1 x 199}: tr A^8 = 199^8 + 199.
    CHECK(trace_power(big, 8) == 2459374191553118401ULL + 199ULL);
    CHECK_THROWS_AS(trace_power(big, 9), CapacityError);
    CHECK_THROWS_AS(serial::trace_power(AdjacencyMatrix(complete_graph(40)), 13), CapacityError);
  }

  TEST_CASE("identities: zero trace, edge trace, triangle trace") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Graph g = gnp_random(1 + seed % 15, 0.4, seed);
      const AdjacencyMatrix a(g);
      CHECK(trace_power(a, 1) == 0);
      CHECK(trace_power(a, 2) == 2 * g.edge_count());
      CHECK(trace_power(a, 3) == 6 * triangle_count(g));
    }
  }

  TEST_CASE("complete graph spectrum") {
    const Spectrum s = eigenvalues(AdjacencyMatrix(complete_graph(4)));
    REQUIRE(s.order() == 4);
    CHECK(s.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(-1.0).epsilon(1e-12));
  }

  TEST_CASE("edgeless and single-edge spectra") {
    for (const double l : eigenvalues(AdjacencyMatrix(parse_edge_list("n 5"))).eigenvalues) CHECK(l == 0.0);
    const Spectrum s = eigenvalues(AdjacencyMatrix(parse_edge_list("0 1")));
    CHECK(s.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(s.eigenvalues[1] == doctest::Approx(-1.0));
    CHECK(eigenvalues(AdjacencyMatrix(Graph())).order() == 0);
  }

  TEST_CASE("cycle graph spectrum is 2cos(2 pi j / n)") {
    const std::size_t n = 9;
    const Spectrum s = eigenvalues(AdjacencyMatrix(cycle_graph(n)));
    std::vector<double> expected;
    for (std::size_t j = 0; j < n; ++j) expected.push_back(2.0 * std::cos(2.0 * M_PI * j / n));
    std::sort(expected.begin(), expected.end(), std::greater<>());
    for (std::size_t i = 0; i < n; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }

  TEST_CASE("eigenvalue tolerance must be positive") {
    CHECK_THROWS_AS(eigenvalues(AdjacencyMatrix(complete_graph(3)), 0.0), ValidationError);
  }

  TEST_CASE("spectral moments") {
    const Spectrum k4 = eigenvalues(AdjacencyMatrix(complete_graph(4)));
    CHECK(std::abs(spectral_moment(k4, 3) - 24.0) < 1e-9);
    const Spectrum k5 = eigenvalues(AdjacencyMatrix(complete_graph(5)));
    CHECK(std::abs(spectral_moment(k5, 5) - 1020.0) < 1e-6);
  }

  TEST_CASE("property: moments match traces and spectrum invariants") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const std::size_t n = 1 + seed % 10;
      const Graph g = gnp_random(n, 0.1 + 0.1 * static_cast<double>(seed % 9), seed * 7 + 1);
      const AdjacencyMatrix a(g);
      const Spectrum s = eigenvalues(a, 1e-12);
      const double tol = 1e-9 * static_cast<double>(n);
      CHECK(std::abs(spectral_moment(s, 1)) <= tol);
      CHECK(std::abs(spectral_moment(s, 2) - 2.0 * static_cast<double>(g.edge_count())) <= tol);
      for (const double l : s.eigenvalues) CHECK(std::abs(l) <= static_cast<double>(n) - 1.0 + 1e-9);
      CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>()));
      for (unsigned k = 1; k <= 8; ++k) {
        const auto t = static_cast<double>(trace_power(a, k));
        CHECK(std::abs(spectral_moment(s, k) - t) <= 1e-6 * std::max(1.0, t));
      }
    }
  }
}
