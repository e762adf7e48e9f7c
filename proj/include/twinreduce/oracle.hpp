#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "twinreduce/graph.hpp"

namespace twinreduce {

/// Hard cap on the exhaustive isomorphism and automorphism searches.
inline constexpr std::size_t kMaxOracleVertices = 12;

/// Exhaustive isomorphism test with degree pruning. Throws SizeGuardError
/// above kMaxOracleVertices.
bool are_isomorphic(const Graph& g, const Graph& h);

/// |Aut(g)| by exhaustive search. Throws SizeGuardError above
/// kMaxOracleVertices.
std::uint64_t automorphism_count(const Graph& g);

/// Calls `visit(image)` once per automorphism, where image[v] is the image
/// of v. Enumeration order is lexicographic in the image sequence.
void for_each_automorphism(const Graph& g,
                           const std::function<void(std::span<const Vertex>)>& visit);

}  // namespace twinreduce
