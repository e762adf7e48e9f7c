#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace twinreduce {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class Partition;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Neighbour lists are kept sorted, and a packed
/// adjacency bit matrix answers `adjacent(u, v)` in constant time.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse; self-loops and out-of-range endpoints throw
  /// InvalidArgument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  friend class GraphBuilder;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
};

/// Incremental edge accumulator producing an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  /// Adds the undirected edge {u, v}; repeated edges are ignored.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::size_t order() const { return n_; }

  Graph build() &&;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Multiset of vertex degrees, as degree -> number of vertices.
struct DegreeProfile {
  std::map<std::size_t, std::size_t> counts;

  std::size_t degree_sum() const;
  bool operator==(const DegreeProfile&) const = default;
};

DegreeProfile degree_profile(const Graph& g);
/// Degree profile restricted to the vertices in `subset`.
DegreeProfile degree_profile(const Graph& g, std::span<const Vertex> subset);

Graph complement(const Graph& g);

/// Subgraph induced on `subset`, relabelled by ascending original index.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// Same vertex set, edges of `a` that are not edges of `b`. With
/// `require_subset`, additionally insists that every edge of `b` is an edge
/// of `a` and throws InvalidArgument otherwise.
Graph graph_difference(const Graph& a, const Graph& b, bool require_subset = false);

/// True iff every edge of `a` is an edge of `b` (same vertex count).
bool is_edge_subset(const Graph& a, const Graph& b);

/// Length of a shortest cycle; nullopt when the graph is a forest.
std::optional<std::size_t> girth(const Graph& g);

/// Proper 2-colouring (0/1 per vertex, the minimum vertex of every component
/// coloured 0), or nullopt if the graph has an odd cycle.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);

Partition connected_components(const Graph& g);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace twinreduce
