#include "twinreduce/oracle.hpp"

#include <string>
#include <vector>

#include "twinreduce/errors.hpp"

namespace twinreduce {

namespace {

void guard(const Graph& g, const char* what) {
  if (g.order() > kMaxOracleVertices) {
    throw SizeGuardError(std::string(what) + ": " + std::to_string(g.order()) +
                         " vertices exceeds the oracle limit of " +
                         std::to_string(kMaxOracleVertices));
  }
}

// Backtracking search for edge-preserving bijections g -> h. Vertex v of g
// may only map to a vertex of h with the same degree, and adjacency to every
// earlier-assigned vertex must be preserved.
class MappingSearch {
 public:
  MappingSearch(const Graph& g, const Graph& h) : g_(g), h_(h), image_(g.order()) {}

  template <typename Visit>
  void run(Visit&& visit) {
    if (g_.order() != h_.order()) return;
    used_ = 0;
    extend(0, visit);
  }

 private:
  template <typename Visit>
  bool extend(Vertex v, Visit& visit) {
    const auto n = static_cast<Vertex>(g_.order());
    if (v == n) return visit(std::span<const Vertex>(image_));
    for (Vertex w = 0; w < n; ++w) {
      if ((used_ >> w) & 1U) continue;
      if (g_.degree(v) != h_.degree(w)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = g_.adjacent(u, v) == h_.adjacent(image_[u], w);
      if (!ok) continue;
      image_[v] = w;
      used_ |= std::uint32_t{1} << w;
      const bool stop = extend(v + 1, visit);
      used_ &= ~(std::uint32_t{1} << w);
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> image_;
  std::uint32_t used_ = 0;
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  guard(g, "are_isomorphic");
  guard(h, "are_isomorphic");
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_profile(g) != degree_profile(h)) return false;
  bool found = false;
  MappingSearch(g, h).run([&](std::span<const Vertex>) {
    found = true;
    return true;
  });
  return found;
}

std::uint64_t automorphism_count(const Graph& g) {
  guard(g, "automorphism_count");
  std::uint64_t count = 0;
  MappingSearch(g, g).run([&](std::span<const Vertex>) {
    ++count;
    return false;
  });
  return count;
}

void for_each_automorphism(const Graph& g,
                           const std::function<void(std::span<const Vertex>)>& visit) {
  guard(g, "for_each_automorphism");
  MappingSearch(g, g).run([&](std::span<const Vertex> image) {
    visit(image);
    return false;
  });
}

}  // namespace twinreduce
