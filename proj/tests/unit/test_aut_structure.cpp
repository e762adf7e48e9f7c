#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "twinreduce/aut_structure.hpp"
#include "twinreduce/cograph.hpp"
#include "twinreduce/errors.hpp"
#include "twinreduce/oracle.hpp"
#include "twinreduce/testkit.hpp"

using namespace twinreduce;
using namespace fixtures;

namespace {

std::uint64_t open_class_product(const Graph& g) {
  std::uint64_t p = 1;
  for (auto size : twin_classes(g, TwinKind::Open).part_sizes()) {
    for (std::size_t i = 2; i <= size; ++i) p *= i;
  }
  return p;
}

const CheckResult& check_named(const Theorem3Record& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("normal series report examples") {
  SUBCASE("empty graph on four vertices") {
    const auto r = normal_series_report(empty(4));
    REQUIRE(r.stages.size() == 1);
    CHECK(r.stages[0].kind == StageKind::Open);
    CHECK(r.stages[0].class_sizes == std::vector<std::size_t>{4});
    CHECK(r.n_order == 24);
    CHECK(r.reduced == empty(1));
  }
  SUBCASE("P4") {
    const auto r = normal_series_report(path(4));
    CHECK(r.stages.empty());
    CHECK(r.n_order == 1);
    CHECK(r.maximal_partition == singleton_partition(4));
  }
  SUBCASE("P3 bound exceeds the realised kernel") {
    const auto r = normal_series_report(path(3));
    REQUIRE(r.stages.size() == 2);
    CHECK(r.stages[0].factor_order == 2);
    CHECK(r.stages[1].factor_order == 2);
    CHECK(r.n_order == 4);
    CHECK(kernel_order(path(3)) == 2);
    CHECK(automorphism_count(path(3)) == 2);
  }
  SUBCASE("n-order is the product of stage factors") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = normal_series_report(testkit::random_graph(9, 0.5, rng));
      BigCount product = 1;
      for (const auto& s : r.stages) {
        CHECK(s.factor_order > 1);
        product *= s.factor_order;
      }
      CHECK(product == r.n_order);
    }
  }
  SUBCASE("factor orders beyond 64 bits") {
    const auto r = normal_series_report(empty(25));
    CHECK(r.n_order == BigCount("15511210043330985984000000"));
  }
}

TEST_CASE("kernel order examples") {
  CHECK(kernel_order(empty(3)) == 6);
  CHECK(kernel_order(path(4)) == 1);
  CHECK(kernel_order(cycle(5)) == 1);
  CHECK(kernel_order(petersen()) == 1);
  CHECK(kernel_order(complete_bipartite(2, 3)) == 12);
  CHECK_THROWS_AS(kernel_order(empty(13)), SizeGuardError);
}

TEST_CASE("kernel order equals |Aut| on cographs and 1 on twin-free graphs") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : testkit::GraphCatalog(n)) {
      if (is_cograph(g)) CHECK(kernel_order(g) == automorphism_count(g));
      if (is_twin_free(g)) CHECK(kernel_order(g) == 1);
    }
  }
}

TEST_CASE("verify examples") {
  SUBCASE("P3") {
    const auto r = verify_theorem3(path(3));
    CHECK(r.passed());
    CHECK(r.aut_order == 2);
    CHECK(r.kernel_order == 2);
    CHECK(r.reduced_aut_order == 1);
  }
  SUBCASE("C5") {
    const auto r = verify_theorem3(cycle(5));
    CHECK(r.passed());
    CHECK(r.kernel_order == 1);
    CHECK(r.aut_order == 10);
    CHECK(r.reduced_aut_order == 10);
  }
  SUBCASE("K_{2,3}") {
    const auto r = verify_theorem3(complete_bipartite(2, 3));
    CHECK(r.passed());
    CHECK(r.first_stage_order == 12);
    CHECK(r.first_stage_expected == 12);
    CHECK(r.aut_order == 12);
  }
  SUBCASE("check names") {
    const auto r = verify_theorem3(petersen());
    REQUIRE(r.checks.size() == 4);
    for (const char* name : {"kernel-subgroup", "kernel-normal", "quotient-embeds", "first-stage-exact"}) {
      CHECK(check_named(r, name).passed);
    }
  }
  CHECK_THROWS_AS(verify_theorem3(empty(11)), SizeGuardError);
}

TEST_CASE("aut-count sandwich and first-stage divisibility") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testkit::random_graph(4 + trial % 5, 0.2 + 0.6 * (trial % 4) / 3.0, rng);
    const auto aut = automorphism_count(g);
    const auto kernel = kernel_order(g);
    const auto report = normal_series_report(g);
    CHECK(aut % kernel == 0);
    CHECK(automorphism_count(report.reduced) % (aut / kernel) == 0);
    CHECK(kernel % open_class_product(g) == 0);
    CHECK(report.n_order >= kernel);
  }
}

namespace {

// Disjoint union of cliques with the given sizes, numbered consecutively.
Graph clique_union(const std::vector<std::size_t>& sizes) {
  std::vector<Edge> e;
  Vertex base = 0;
  for (auto k : sizes) {
    for (Vertex i = 0; i < k; ++i) {
      for (Vertex j = i + 1; j < k; ++j) e.emplace_back(base + i, base + j);
    }
    base += static_cast<Vertex>(k);
  }
  return Graph::from_edges(base, e);
}

void integer_partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                        std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    integer_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("n-order against the kernel on disjoint unions of cliques") {
  // Equal clique sizes: every staged factor is realised. Mixed sizes: the
  // last open stage counts swaps of cliques of different sizes, which no
  // automorphism performs, so the bound is strict.
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<std::size_t> cur;
    std::vector<std::vector<std::size_t>> shapes;
    integer_partitions(n, n, cur, shapes);
    for (const auto& shape : shapes) {
      const Graph g = clique_union(shape);
      const bool uniform = shape.front() == shape.back();
      const auto bound = normal_series_report(g).n_order;
      const auto kernel = kernel_order(g);
      CHECK(kernel == automorphism_count(g));
      if (uniform) {
        CHECK(bound == kernel);
      } else {
        CHECK(bound > kernel);
      }
    }
  }
  const Graph mixed = clique_union({3, 2, 1, 1});
  CHECK(normal_series_report(mixed).n_order == 144);
  CHECK(kernel_order(mixed) == 24);
}
