#include "qec/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "qec/errors.hpp"

namespace qec {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + ", " + std::to_string(v) + "}";
}

std::vector<int> bfs_from(const std::vector<std::vector<Vertex>>& adjacency, Vertex source) {
  std::vector<int> dist(adjacency.size(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> deg;
  deg.reserve(adjacency_.size());
  for (const auto& nb : adjacency_) deg.push_back(nb.size());
  std::sort(deg.begin(), deg.end());
  return deg;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw InvalidParameterError("graph must have at least one vertex");
  std::vector<std::vector<Vertex>> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw VertexRangeError("edge " + edge_str(u, v) + " has an endpoint outside 0.." +
                             std::to_string(n - 1));
    }
    if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (Vertex u = 0; u < n; ++u) {
    auto& nb = adjacency[u];
    std::sort(nb.begin(), nb.end());
    const auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) throw DuplicateEdgeError("duplicate edge " + edge_str(u, *dup));
  }
  const auto reach = bfs_from(adjacency, 0);
  const auto unreached = std::find(reach.begin(), reach.end(), -1);
  if (unreached != reach.end()) {
    throw DisconnectedGraphError(
        "graph is disconnected: vertex " +
        std::to_string(static_cast<std::size_t>(unreached - reach.begin())) +
        " is unreachable from vertex 0");
  }
  return Graph(std::move(adjacency), edges.size());
}

Graph named_graph(GraphKind kind, std::size_t n) {
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::complete:
      if (n < 1) throw InvalidParameterError("complete graph needs n >= 1");
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case GraphKind::path:
      if (n < 1) throw InvalidParameterError("path graph needs n >= 1");
      for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphKind::cycle:
      if (n < 3) throw InvalidParameterError("cycle graph needs n >= 3");
      for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n - 1);
      break;
    case GraphKind::star:
      if (n < 1) throw InvalidParameterError("star graph needs n >= 1");
      for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
  }
  return build_graph(n, edges);
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw InvalidParameterError("distance matrix entry count does not match dimension");
  }
}

DistanceMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> adjacency(n);
  for (Vertex u = 0; u < n; ++u) {
    const auto nb = g.neighbors(u);
    adjacency[u].assign(nb.begin(), nb.end());
  }
  std::vector<int> entries;
  entries.reserve(n * n);
  for (Vertex s = 0; s < n; ++s) {
    const auto row = bfs_from(adjacency, s);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(entries));
}

StarSpec::StarSpec(std::vector<RootedGraph> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidParameterError("star product needs at least one factor");
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const auto& f = factors_[j];
    if (f.graph.vertex_count() < 2) {
      throw InvalidParameterError("factor " + std::to_string(j) + " has fewer than two vertices");
    }
    if (f.root >= f.graph.vertex_count()) {
      throw InvalidParameterError("root of factor " + std::to_string(j) + " is out of range");
    }
  }
}

StarProduct star_product(const StarSpec& spec) {
  std::vector<std::vector<Vertex>> vertex_maps;
  std::vector<Edge> edges;
  Vertex next = 1;
  for (const auto& [graph, root] : spec.factors()) {
    std::vector<Vertex> map(graph.vertex_count());
    for (Vertex v = 0; v < graph.vertex_count(); ++v) map[v] = (v == root) ? 0 : next++;
    for (const auto& [u, v] : graph.edges()) edges.emplace_back(map[u], map[v]);
    vertex_maps.push_back(std::move(map));
  }
  return StarProduct{build_graph(next, edges), std::move(vertex_maps)};
}

bool is_isometric_subgraph(const Graph& g, const Graph& h, std::span<const Vertex> embedding) {
  if (embedding.size() != h.vertex_count()) {
    throw EmbeddingError("embedding must map every vertex of the subgraph");
  }
  std::vector<bool> used(g.vertex_count(), false);
  for (Vertex image : embedding) {
    if (image >= g.vertex_count()) throw EmbeddingError("embedding image out of range");
    if (used[image]) throw EmbeddingError("embedding is not injective");
    used[image] = true;
  }
  for (const auto& [u, v] : h.edges()) {
    if (!g.has_edge(embedding[u], embedding[v])) {
      throw EmbeddingError("embedding does not map edge " + edge_str(u, v) + " to an edge");
    }
  }
  const auto dg = distance_matrix(g);
  const auto dh = distance_matrix(h);
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    for (Vertex y = x + 1; y < h.vertex_count(); ++y) {
      if (dh(x, y) != dg(embedding[x], embedding[y])) return false;
    }
  }
  return true;
}

}  // namespace qec
