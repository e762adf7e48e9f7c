#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "twinreduce/graph.hpp"

namespace twinreduce {

/// One side of a bipartition: its size and degree profile.
struct Side {
  std::size_t size = 0;
  DegreeProfile degrees;
};

struct ComponentSummary {
  std::size_t order = 0;
  std::size_t edges = 0;
  DegreeProfile degrees;
  /// Colour classes, the side holding the smallest vertex first; empty
  /// when the component has an odd cycle.
  std::optional<std::pair<Side, Side>> sides;
  std::optional<std::size_t> girth;
};

struct GraphSummary {
  std::size_t order = 0;
  std::size_t edges = 0;
  /// Component order -> number of components of that order.
  std::map<std::size_t, std::size_t> census;
  /// The largest component; ties go to the one with the smallest vertex.
  std::vector<Vertex> largest_vertices;
  ComponentSummary largest;
};

ComponentSummary summarize_component(const Graph& g);
GraphSummary summarize(const Graph& g);

/// Induced subgraph on the vertices of positive degree.
Graph drop_isolated(const Graph& g);

}  // namespace twinreduce
