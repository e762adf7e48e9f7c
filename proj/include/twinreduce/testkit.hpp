#pragma once

#include <cstdint>
#include <iterator>
#include <random>
#include <vector>

#include "twinreduce/graph.hpp"
#include "twinreduce/partition.hpp"

// Exhaustive and randomized oracles used to check the main library. They
// work from the definitions (partition enumeration, the sibling rules, join)
// and never call into twin reduction.
namespace twinreduce::testkit {

inline constexpr std::size_t kMaxPartitionPoints = 8;
inline constexpr std::size_t kMaxSiblingOracleVertices = 7;
inline constexpr std::size_t kMaxCatalogVertices = 6;

/// Every set partition of 0..n-1 exactly once, generated from restricted
/// growth strings in lexicographic order.
std::vector<Partition> all_partitions(std::size_t n);

/// All sibling partitions of g, in enumeration order.
std::vector<Partition> all_sibling_partitions(const Graph& g);

/// Join of every sibling partition of g. Throws std::logic_error if the
/// result is not itself sibling or some sibling partition is not finer.
Partition brute_maximal_sibling(const Graph& g);

/// All 2^(n(n-1)/2) labelled graphs on n vertices. Graph number `mask` has
/// edge k (in graph6 column order (0,1), (0,2), (1,2), (0,3), ...) iff bit
/// k of mask is set.
class GraphCatalog {
 public:
  explicit GraphCatalog(std::size_t n);

  std::size_t vertices() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }
  Graph at(std::uint64_t mask) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Graph;

    iterator(const GraphCatalog* cat, std::uint64_t mask) : cat_(cat), mask_(mask) {}
    Graph operator*() const { return cat_->at(mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    bool operator==(const iterator& o) const { return mask_ == o.mask_; }

   private:
    const GraphCatalog* cat_;
    std::uint64_t mask_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  std::size_t n_;
  std::vector<Edge> pairs_;
};

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Uniformly random labels in [0, blocks), as a partition of 0..n-1.
Partition random_partition(std::size_t n, std::size_t blocks, std::mt19937_64& rng);

/// Bell number B(n) by the Bell triangle.
std::uint64_t bell_number(std::size_t n);

}  // namespace twinreduce::testkit
