#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "twinreduce/errors.hpp"
#include "twinreduce/oracle.hpp"
#include "twinreduce/testkit.hpp"
#include "twinreduce/twins.hpp"

using namespace twinreduce;
using namespace fixtures;

namespace {

Partition parts(std::size_t n, std::vector<std::vector<Vertex>> p) { return Partition::from_parts(n, std::move(p)); }

bool twins(const Graph& g, Vertex u, Vertex v) { return twin_kind(g, u, v) != TwinKind::NotTwins; }

}  // namespace

TEST_CASE("twin kind") {
  CHECK(twin_kind(empty(2), 0, 1) == TwinKind::Open);
  CHECK(twin_kind(complete(2), 0, 1) == TwinKind::Closed);
  const Graph p4 = path(4);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) CHECK(twin_kind(p4, u, v) == TwinKind::NotTwins);
  }
  CHECK(twin_kind(star(3), 1, 3) == TwinKind::Open);
  CHECK_THROWS_AS(twin_kind(p4, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(twin_kind(p4, 1, 4), InvalidArgument);
}

TEST_CASE("twin classes") {
  CHECK(twin_classes(empty(3), TwinKind::Open) == parts(3, {{0, 1, 2}}));
  CHECK(twin_classes(complete(3), TwinKind::Closed) == parts(3, {{0, 1, 2}}));
  for (auto filter : {std::optional<TwinKind>{}, std::optional{TwinKind::Open}, std::optional{TwinKind::Closed}}) {
    CHECK(twin_classes(path(4), filter) == singleton_partition(4));
  }
  // K2 plus an isolated pair: closed class {0,1}, open class {2,3}.
  const Graph g = make(4, {{0, 1}});
  CHECK(twin_classes(g) == parts(4, {{0, 1}, {2, 3}}));
  CHECK(twin_classes(g, TwinKind::Open) == parts(4, {{0}, {1}, {2, 3}}));
  CHECK(twin_classes(g, TwinKind::Closed) == parts(4, {{0, 1}, {2}, {3}}));
}

TEST_CASE("twin freeness") {
  CHECK(is_twin_free(path(4)));
  CHECK(is_twin_free(cycle(5)));
  CHECK_FALSE(is_twin_free(complete(2)));
}

TEST_CASE("mutual twin relation is transitive") {
  auto check = [](const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || !twins(g, u, v)) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (w == u || w == v || !twins(g, v, w)) continue;
          CHECK(twins(g, u, w));
        }
      }
    }
  };
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const Graph& g : testkit::GraphCatalog(n)) check(g);
  }
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) check(testkit::random_graph(12, 0.5, rng));
}

TEST_CASE("complement duality") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Graph& g : testkit::GraphCatalog(n)) {
      const Graph h = complement(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          CHECK((twin_kind(g, u, v) == TwinKind::Open) == (twin_kind(h, u, v) == TwinKind::Closed));
        }
      }
      CHECK(maximal_sibling_partition(g) == maximal_sibling_partition(h));
    }
  }
}

TEST_CASE("complete twin reduction examples") {
  SUBCASE("P4 is twin-free") {
    const auto r = complete_twin_reduction(path(4));
    CHECK(r.reduced == path(4));
    CHECK(r.partition == singleton_partition(4));
    CHECK(r.trace.steps.empty());
  }
  SUBCASE("K5 collapses by closed merges") {
    const auto r = complete_twin_reduction(complete(5));
    CHECK(r.reduced == empty(1));
    CHECK(r.partition == parts(5, {{0, 1, 2, 3, 4}}));
    REQUIRE(r.trace.steps.size() == 4);
    for (const auto& s : r.trace.steps) CHECK(s.kind == TwinKind::Closed);
  }
  SUBCASE("star K_{1,4}: leaves merge as open twins, then the centre closes") {
    const auto r = complete_twin_reduction(star(4));
    CHECK(r.reduced == empty(1));
    const std::vector<MergeStep> expected{{0, 1, 2, TwinKind::Open},
                                          {1, 1, 3, TwinKind::Open},
                                          {2, 1, 4, TwinKind::Open},
                                          {3, 0, 1, TwinKind::Closed}};
    CHECK(r.trace.steps == expected);
    CHECK(is_twin_free(r.reduced));
  }
  SUBCASE("duplicated leaf on a path") {
    // Path 0-1-2-3-4 with a second leaf 5 on vertex 1. Merging the leaves
    // leaves P5, which is twin-free.
    const Graph g = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}});
    CHECK(twin_classes(g) == parts(6, {{0, 5}, {1}, {2}, {3}, {4}}));
    const auto r = complete_twin_reduction(g);
    CHECK(r.partition == parts(6, {{0, 5}, {1}, {2}, {3}, {4}}));
    CHECK(r.reduced == path(5));
  }
  SUBCASE("P3 reduces to a point through a created twin") {
    const auto r = complete_twin_reduction(path(3));
    CHECK(r.trace.steps.size() == 2);
    CHECK(r.trace.steps[0] == MergeStep{0, 0, 2, TwinKind::Open});
    CHECK(r.trace.steps[1] == MergeStep{1, 0, 1, TwinKind::Closed});
  }
}

TEST_CASE("maximal sibling partition examples") {
  CHECK(maximal_sibling_partition(complete_bipartite(2, 3)) == parts(5, {{0, 1, 2, 3, 4}}));
  CHECK(maximal_sibling_partition(cycle(5)) == singleton_partition(5));
  // C5 plus vertex 5 sharing vertex 0's neighbours {1, 4}.
  const Graph g = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 4}});
  const auto expected = parts(6, {{0, 5}, {1}, {2}, {3}, {4}});
  CHECK(maximal_sibling_partition(g) == expected);
  CHECK(testkit::brute_maximal_sibling(g) == expected);
}

TEST_CASE("reduction output is a twin-free quotient") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testkit::random_graph(1 + rng() % 12, 0.1 + 0.8 * (trial % 9) / 8.0, rng);
    const auto r = complete_twin_reduction(g);
    CHECK(is_twin_free(r.reduced));
    CHECK(quotient(g, r.partition) == r.reduced);
    CHECK(replay_trace(r.trace, &g) == r.partition);
  }
}

TEST_CASE("order independence and trace prefixes") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testkit::random_graph(1 + rng() % 10, (trial % 5 + 1) / 6.0, rng);
    const auto det = complete_twin_reduction(g);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto rnd = complete_twin_reduction(g, MergePolicy::randomized(seed * 7919 + trial));
      CHECK(rnd.partition == det.partition);
      CHECK(are_isomorphic(rnd.reduced, det.reduced));
      for (const auto& prefix : trace_prefixes(rnd.trace)) CHECK(is_sibling(g, prefix));
    }
  }
}

TEST_CASE("trace text format") {
  const auto r = complete_twin_reduction(star(4));
  const std::string text = write_trace(r.trace);
  CHECK(text ==
        "step 0 merge 1 2 kind open\n"
        "step 1 merge 1 3 kind open\n"
        "step 2 merge 1 4 kind open\n"
        "step 3 merge 0 1 kind closed\n"
        "0 1 2 3 4\n");
  const auto parsed = parse_trace(text);
  CHECK(parsed.steps == r.trace.steps);
  CHECK(parsed.initial_order == 5);
  CHECK(write_partition(replay_trace(parsed)) == write_partition(parsed.final_partition));

  CHECK_THROWS_AS(parse_trace("step 0 merge 1 2 kind sideways\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("step 0 merge 1\n0 1 2\n"), ParseError);
  auto bad = parse_trace("step 0 merge 1 2 kind open\nstep 1 merge 2 0 kind open\n0 1 2\n");
  CHECK_THROWS_AS(replay_trace(bad), InvalidArgument);
  // Kind mismatch is caught when the graph is supplied.
  auto wrong_kind = parse_trace("step 0 merge 1 2 kind closed\nstep 1 merge 0 1 kind closed\n0 1 2 3 4\n");
  const Graph s4 = star(4);
  CHECK_THROWS_AS(replay_trace(wrong_kind, &s4), InvalidArgument);
}

TEST_CASE("staged reduction") {
  SUBCASE("P3") {
    const auto r = staged_reduction(path(3));
    REQUIRE(r.stages.size() == 2);
    CHECK(r.stages[0].kind == StageKind::Open);
    CHECK(r.stages[0].class_sizes == std::vector<std::size_t>{2, 1});
    CHECK(r.stages[0].cumulative == parts(3, {{0, 2}, {1}}));
    CHECK(r.stages[1].kind == StageKind::Closed);
    CHECK(r.stages[1].class_sizes == std::vector<std::size_t>{2});
    CHECK(r.reduced == empty(1));
  }
  SUBCASE("P4 has no stages") { CHECK(staged_reduction(path(4)).stages.empty()); }
  SUBCASE("empty graph on four vertices") {
    const auto r = staged_reduction(empty(4));
    REQUIRE(r.stages.size() == 1);
    CHECK(r.stages[0].kind == StageKind::Open);
    CHECK(r.stages[0].class_sizes == std::vector<std::size_t>{4});
  }
  SUBCASE("class sizes sum to the stage's quotient order") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      for (const auto& s : staged_reduction(testkit::random_graph(9, 0.5, rng)).stages) {
        std::size_t sum = 0;
        for (auto c : s.class_sizes) sum += c;
        CHECK(sum == s.quotient_order);
        CHECK(s.merges > 0);
      }
    }
  }
}

TEST_CASE("staged reduction agrees with complete reduction") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : testkit::GraphCatalog(n)) CHECK(staged_reduction(g).final_partition == maximal_sibling_partition(g));
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testkit::random_graph(1 + rng() % 12, (trial % 7 + 1) / 8.0, rng);
    CHECK(staged_reduction(g).final_partition == maximal_sibling_partition(g));
  }
}
