#include "twinreduce/testkit.hpp"

#include <stdexcept>
#include <string>

#include "twinreduce/errors.hpp"

namespace twinreduce::testkit {

namespace {

void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw SizeGuardError(std::string(what) + ": " + std::to_string(n) + " exceeds the limit of " +
                         std::to_string(limit));
  }
}

}  // namespace

std::vector<Partition> all_partitions(std::size_t n) {
  guard(n, kMaxPartitionPoints, "all_partitions");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // a[i] <= 1 + max(a[0..i-1]), a[0] = 0.
  std::vector<std::size_t> a(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    out.push_back(Partition::from_labels(a));
    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

std::vector<Partition> all_sibling_partitions(const Graph& g) {
  guard(g.order(), kMaxSiblingOracleVertices, "all_sibling_partitions");
  std::vector<Partition> out;
  for (auto& p : all_partitions(g.order())) {
    if (is_sibling(g, p)) out.push_back(std::move(p));
  }
  return out;
}

Partition brute_maximal_sibling(const Graph& g) {
  guard(g.order(), kMaxSiblingOracleVertices, "brute_maximal_sibling");
  const auto siblings = all_sibling_partitions(g);
  Partition acc = siblings.front();  // the singleton partition is always sibling
  for (const auto& p : siblings) acc = join(acc, p);
  if (!is_sibling(g, acc)) throw std::logic_error("join of all sibling partitions is not sibling");
  for (const auto& p : siblings) {
    if (!is_finer(p, acc)) throw std::logic_error("sibling partition not finer than the join");
  }
  return acc;
}

GraphCatalog::GraphCatalog(std::size_t n) : n_(n) {
  guard(n, kMaxCatalogVertices, "GraphCatalog");
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }
}

Graph GraphCatalog::at(std::uint64_t mask) const {
  GraphBuilder b(n_);
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if ((mask >> k) & 1U) b.add_edge(pairs_[k].first, pairs_[k].second);
  }
  return std::move(b).build();
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (coin(rng)) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

Partition random_partition(std::size_t n, std::size_t blocks, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, blocks - 1);
  std::vector<std::size_t> labels(n);
  for (auto& l : labels) l = pick(rng);
  return Partition::from_labels(labels);
}

std::uint64_t bell_number(std::size_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace twinreduce::testkit
