#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twinreduce/graph.hpp"

namespace twinreduce {

/// Induced path a-b-c-d: edges ab, bc, cd; non-edges ac, ad, bd.
using P4 = std::array<Vertex, 4>;

/// Lexicographically first induced P4 in `g`, if any.
std::optional<P4> find_induced_p4(const Graph& g);

/// Lexicographically first induced P4 among the vertices of `subset`
/// (original labels; `subset` need not be sorted).
std::optional<P4> find_induced_p4_within(const Graph& g, std::span<const Vertex> subset);

/// Cograph recognition by complete twin reduction: true iff the reduction
/// ends at a single vertex. The empty graph counts as a cograph.
bool is_cograph(const Graph& g);

/// Rooted decomposition tree of a cograph. Leaves carry a vertex; Union
/// nodes are disjoint unions of their children, Join nodes add every edge
/// between different children.
struct Cotree {
  enum class Kind { Leaf, Union, Join };

  Kind kind = Kind::Leaf;
  Vertex vertex = 0;  // leaves only
  std::vector<Cotree> children;

  static Cotree leaf(Vertex v) { return Cotree{Kind::Leaf, v, {}}; }

  /// Smallest leaf label below this node.
  Vertex min_leaf() const;
  std::size_t leaf_count() const;

  bool operator==(const Cotree&) const = default;
};

struct NotCograph {
  P4 witness;
};

/// Cotree by recursive component / co-component decomposition, or the
/// lexicographically first induced P4 when `g` is not a cograph. Children
/// are ordered by their smallest leaf, so the result is canonical. Throws
/// InvalidArgument on the empty graph.
std::variant<Cotree, NotCograph> build_cotree(const Graph& g);

/// True iff the subgraph induced on `subset` decomposes into a cotree.
/// Runs in roughly linear time per decomposition level; no witness.
bool decomposes_as_cograph(const Graph& g, std::span<const Vertex> subset);

/// u ~ v iff the lowest common ancestor of their leaves is a Join node.
/// Throws InvalidArgument on malformed trees (internal node with fewer than
/// two children, non-alternating labels, leaves not a bijection onto 0..n-1).
Graph cotree_to_graph(const Cotree& t);

/// Leaf = vertex index; internal = "U(...)" or "J(...)", comma-separated.
std::string write_cotree(const Cotree& t);
Cotree parse_cotree(std::string_view text);

}  // namespace twinreduce
