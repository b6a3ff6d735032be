#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple connected undirected graph.
///
/// Instances are only produced by build_graph (and the helpers built on it),
/// so every Graph in circulation is simple and connected.
class Graph {
 public:
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Sorted neighbor list of `v`.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }

  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  std::vector<std::size_t> degree_sequence() const;

  bool is_tree() const { return edge_count_ + 1 == vertex_count(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::vector<std::vector<Vertex>> adjacency, std::size_t edge_count)
      : adjacency_(std::move(adjacency)), edge_count_(edge_count) {}

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph on vertices 0..n-1.
///
/// Throws VertexRangeError, SelfLoopError, DuplicateEdgeError (including a
/// reversed copy of an existing edge) or DisconnectedGraphError.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

enum class GraphKind { complete, path, cycle, star };

/// K_n, P_n (edges {i, i+1}), C_n or the star K_{1,n-1} centred at vertex 0.
Graph named_graph(GraphKind kind, std::size_t n);

/// Symmetric matrix of shortest-path lengths, stored row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<int> entries);

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const int> row(std::size_t i) const {
    return std::span<const int>(entries_).subspan(i * n_, n_);
  }
  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> entries_;
};

/// All-pairs BFS.
DistanceMatrix distance_matrix(const Graph& g);

struct RootedGraph {
  Graph graph;
  Vertex root = 0;
};

/// Factors of a star product (G_1, o_1) * ... * (G_r, o_r).
class StarSpec {
 public:
  /// Throws InvalidParameterError when the list is empty, a root is out of
  /// range, or a factor has fewer than two vertices.
  explicit StarSpec(std::vector<RootedGraph> factors);

  std::span<const RootedGraph> factors() const { return factors_; }

 private:
  std::vector<RootedGraph> factors_;
};

struct StarProduct {
  Graph graph;
  /// vertex_maps[j][v] is the product vertex of factor j's vertex v. Every
  /// root maps to 0; factor j's remaining vertices form one contiguous block,
  /// blocks laid out in factor order, vertices in increasing factor index.
  std::vector<std::vector<Vertex>> vertex_maps;
};

StarProduct star_product(const StarSpec& spec);

/// True iff distances in `h` agree with distances in `g` between the images.
///
/// `embedding[v]` is the image of h's vertex v. Throws EmbeddingError unless
/// the map is injective, in range, and sends h-edges to g-edges.
bool is_isometric_subgraph(const Graph& g, const Graph& h,
                           std::span<const Vertex> embedding);

// Edge-list text format:
//   # comment
//   n <vertex_count>
//   u v
// Blank lines and anything after '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace qec
