#include "cyclebound/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include "cyclebound/errors.hpp"

namespace cyclebound {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) {
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    if (u >= vertex_count_ || v >= vertex_count_) {
      throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} has an endpoint >= vertex count " + std::to_string(vertex_count_));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t i = 0; i < vertex_count_; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < vertex_count_; ++i) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= vertex_count_) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range");
  }
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> declared;
  bool seen_content = false;
  std::uint64_t max_id = 0;
  bool any_edge = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!seen_content && toks.front() == "n") {
      seen_content = true;
      if (toks.size() != 2) throw ParseError(line_no, "header must be 'n <V>'");
      declared = parse_uint(toks[1], line_no);
      continue;
    }
    seen_content = true;
    if (toks.size() != 2) {
      throw ParseError(line_no, "expected 'u v', got " + std::to_string(toks.size()) + " tokens");
    }
    const std::uint64_t u = parse_uint(toks[0], line_no);
    const std::uint64_t v = parse_uint(toks[1], line_no);
    if (u > UINT32_MAX - 1 || v > UINT32_MAX - 1) {
      throw ValidationError("line " + std::to_string(line_no) + ": vertex id too large");
    }
    if (u == v) {
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                            std::to_string(u));
    }
    if (declared && (u >= *declared || v >= *declared)) {
      throw ValidationError("line " + std::to_string(line_no) + ": vertex id >= declared n " +
                            std::to_string(*declared));
    }
    max_id = std::max({max_id, u, v});
    any_edge = true;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  const std::size_t n = declared ? *declared : (any_edge ? max_id + 1 : 0);
  return Graph(n, std::move(edges));
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ValidationError("cycle graph needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

Graph paw_graph() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  unsigned bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (bit < 64 && ((mask >> bit) & 1U)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph gnp_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("probability must lie in [0,1]");
  const bool always = p >= 1.0;
  const auto threshold =
      always ? 0 : static_cast<std::uint64_t>(std::floor(std::ldexp(static_cast<long double>(p), 64)));
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t draw = rng.next();
      if (always || draw < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

std::size_t degree(const Graph& g, Vertex v) { return g.neighbors(v).size(); }

bool is_complete_on_support(const Graph& g) {
  std::size_t support = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) support += degree(g, v) > 0 ? 1 : 0;
  return g.edge_count() == support * (support ? support - 1 : 0) / 2;
}

}  // namespace cyclebound
