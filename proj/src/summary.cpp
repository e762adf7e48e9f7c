#include "twinreduce/summary.hpp"

#include "twinreduce/partition.hpp"

namespace twinreduce {

ComponentSummary summarize_component(const Graph& g) {
  ComponentSummary s;
  s.order = g.order();
  s.edges = g.edge_count();
  s.degrees = degree_profile(g);
  s.girth = girth(g);
  if (const auto colour = bipartition(g)) {
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < g.order(); ++v) ((*colour)[v] == (*colour)[0] ? a : b).push_back(v);
    s.sides.emplace(Side{a.size(), degree_profile(g, a)}, Side{b.size(), degree_profile(g, b)});
  }
  return s;
}

GraphSummary summarize(const Graph& g) {
  GraphSummary s;
  s.order = g.order();
  s.edges = g.edge_count();
  if (g.order() == 0) return s;
  const auto components = connected_components(g);
  const std::vector<Vertex>* best = nullptr;
  for (const auto& part : components.parts()) {
    ++s.census[part.size()];
    // Parts come ordered by smallest vertex, so strict > keeps the first.
    if (!best || part.size() > best->size()) best = &part;
  }
  s.largest_vertices = *best;
  s.largest = summarize_component(induced_subgraph(g, *best));
  return s;
}

Graph drop_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

}  // namespace twinreduce
