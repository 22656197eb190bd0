#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclebound {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected loopless graph on vertices 0..V-1.
///
/// Edges are stored normalized (u < v), deduplicated and sorted. The value is
/// immutable after construction, so it may be shared read-only between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary list of pairs. Pairs are normalized and
  /// deduplicated. Throws ValidationError on a self-loop or an endpoint >= V.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Sorted neighbor list of v. Throws ValidationError when v is out of range.
  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Parses the edge-list text format: optional "n <V>" header as the first
/// non-comment line, then one "u v" pair per line. '#' lines and blank lines
/// are skipped.
Graph parse_edge_list(std::string_view text);

/// Canonical text form: "n <V>" followed by sorted "u v" lines, LF endings.
std::string render_edge_list(const Graph& g);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
/// Triangle 0-1-2 with pendant edge 0-3.
Graph paw_graph();

/// Graph on n vertices whose edges are the set bits of `mask`, with pair
/// {u,v} (u<v) assigned bit index in lexicographic pair order.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Erdos-Renyi G(n, p). Pairs are visited in lexicographic order and pair
/// {u,v} is kept iff the next splitmix64 output is below floor(p * 2^64).
Graph gnp_random(std::size_t n, double p, std::uint64_t seed);

std::size_t degree(const Graph& g, Vertex v);

/// True when the edge set is a clique on its non-isolated vertices.
bool is_complete_on_support(const Graph& g);

/// splitmix64 stream used by the generators and the numeric optimizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace cyclebound
