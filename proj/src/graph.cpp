#include "twinreduce/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "twinreduce/errors.hpp"
#include "twinreduce/partition.hpp"

namespace twinreduce {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for " +
                          std::to_string(n) + "-vertex graph");
  }
}

}  // namespace

Graph::Graph(std::size_t n) : Graph(GraphBuilder(n).build()) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n)
    : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.words_ = words_;
  g.adj_.resize(n_);
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    auto& row = g.adj_[u];
    const std::uint64_t* w = bits_.data() + u * words_;
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t word = w[k];
      while (word != 0) {
        row.push_back(static_cast<Vertex>(k * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
    degree_sum += row.size();
  }
  g.edge_count_ = degree_sum / 2;
  g.bits_ = std::move(bits_);
  return g;
}

std::size_t DegreeProfile::degree_sum() const {
  std::size_t s = 0;
  for (auto [d, c] : counts) s += d * c;
  return s;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  for (Vertex v = 0; v < g.order(); ++v) ++p.counts[g.degree(v)];
  return p;
}

DegreeProfile degree_profile(const Graph& g, std::span<const Vertex> subset) {
  DegreeProfile p;
  for (Vertex v : subset) {
    check_vertex(g.order(), v);
    ++p.counts[g.degree(v)];
  }
  return p;
}

Graph complement(const Graph& g) {
  const auto n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) check_vertex(g.order(), v);

  std::vector<Vertex> index(g.order(), std::numeric_limits<Vertex>::max());
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<Vertex>(i);

  GraphBuilder b(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (Vertex w : g.neighbours(sorted[i])) {
      const Vertex j = index[w];
      if (j != std::numeric_limits<Vertex>::max() && i < j) b.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return std::move(b).build();
}

bool is_edge_subset(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  for (Vertex u = 0; u < a.order(); ++u) {
    for (Vertex v : a.neighbours(u)) {
      if (!b.adjacent(u, v)) return false;
    }
  }
  return true;
}

Graph graph_difference(const Graph& a, const Graph& b, bool require_subset) {
  if (a.order() != b.order()) {
    throw InvalidArgument("graph_difference: vertex counts differ (" + std::to_string(a.order()) +
                          " vs " + std::to_string(b.order()) + ")");
  }
  if (require_subset && !is_edge_subset(b, a)) {
    throw InvalidArgument("graph_difference: subtrahend has an edge missing from the minuend");
  }
  GraphBuilder out(a.order());
  for (Vertex u = 0; u < a.order(); ++u) {
    for (Vertex v : a.neighbours(u)) {
      if (u < v && !b.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return std::move(out).build();
}

std::optional<std::size_t> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge (x, y) closes a cycle through the
  // root of length at most dist[x] + dist[y] + 1, and the minimum over all
  // roots is exact.
  const auto n = g.order();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnseen;
  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> touched;
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    for (Vertex t : touched) dist[t] = kUnseen;
    touched.clear();
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    touched.push_back(root);
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbours(x)) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          touched.push_back(y);
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best;
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  const auto n = g.order();
  constexpr std::uint8_t kNone = 2;
  std::vector<std::uint8_t> colour(n, kNone);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != kNone) continue;
    colour[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbours(x)) {
        if (colour[y] == kNone) {
          colour[y] = static_cast<std::uint8_t>(1 - colour[x]);
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

Partition connected_components(const Graph& g) {
  const auto n = g.order();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(n, kNone);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kNone) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbours(x)) {
        if (label[y] == kNone) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return Partition::from_labels(label);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const auto n = g.order();
  if (perm.size() != n) throw InvalidArgument("relabel: permutation size differs from vertex count");
  std::vector<bool> seen(n, false);
  for (Vertex v : perm) {
    check_vertex(n, v);
    if (seen[v]) throw InvalidArgument("relabel: not a permutation");
    seen[v] = true;
  }
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

}  // namespace twinreduce
