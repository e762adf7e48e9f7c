#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "twinreduce/errors.hpp"
#include "twinreduce/partition.hpp"
#include "twinreduce/testkit.hpp"
#include "twinreduce/twins.hpp"

using namespace twinreduce;
using namespace fixtures;

namespace {

Partition parts(std::size_t n, std::vector<std::vector<Vertex>> p) { return Partition::from_parts(n, std::move(p)); }

// Join by repeated min-label propagation until nothing changes.
Partition join_by_propagation(const Partition& a, const Partition& b) {
  const auto n = a.ground_size();
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto* p : {&a, &b}) {
      for (const auto& part : p->parts()) {
        std::size_t m = label[part.front()];
        for (Vertex v : part) m = std::min(m, label[v]);
        for (Vertex v : part) {
          if (label[v] != m) {
            label[v] = m;
            changed = true;
          }
        }
      }
    }
  }
  return Partition::from_labels(label);
}

}  // namespace

TEST_CASE("canonical form") {
  const auto p = parts(5, {{4, 2}, {3}, {1, 0}});
  CHECK(p.parts() == std::vector<std::vector<Vertex>>{{0, 1}, {2, 4}, {3}});
  CHECK(p.part_of(4) == 1);
  CHECK_THROWS_AS(parts(3, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(parts(3, {{0, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(parts(3, {{0, 1, 2}, {}}), InvalidArgument);
}

TEST_CASE("singleton partition") {
  CHECK(singleton_partition(3) == parts(3, {{0}, {1}, {2}}));
  CHECK(singleton_partition(1) == parts(1, {{0}}));
  CHECK_THROWS_AS(singleton_partition(0), InvalidArgument);
  for (const auto& p : testkit::all_partitions(5)) CHECK(is_finer(singleton_partition(5), p));
}

TEST_CASE("refinement order") {
  CHECK(is_finer(parts(3, {{0}, {1}, {2}}), parts(3, {{0, 1}, {2}})));
  CHECK_FALSE(is_finer(parts(3, {{0, 1}, {2}}), parts(3, {{0}, {1, 2}})));
  for (const auto& p : testkit::all_partitions(4)) CHECK(is_finer(p, p));
  CHECK_THROWS_AS(is_finer(singleton_partition(3), singleton_partition(4)), GroundSetMismatch);
}

TEST_CASE("join examples") {
  const auto p = parts(4, {{0, 1}, {2}, {3}});
  CHECK(join(p, singleton_partition(4)) == p);
  CHECK(join(p, parts(4, {{0}, {1, 2}, {3}})) == parts(4, {{0, 1, 2}, {3}}));
  CHECK_THROWS_AS(join(singleton_partition(3), singleton_partition(4)), GroundSetMismatch);
}

TEST_CASE("join lattice properties against a propagation oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 8;
    const auto a = testkit::random_partition(n, 1 + rng() % n, rng);
    const auto b = testkit::random_partition(n, 1 + rng() % n, rng);
    const auto c = testkit::random_partition(n, 1 + rng() % n, rng);
    const auto ab = join(a, b);
    CHECK(ab == join_by_propagation(a, b));
    CHECK(ab == join(b, a));
    CHECK(is_finer(a, ab));
    CHECK(is_finer(b, ab));
    CHECK(join(ab, c) == join(a, join(b, c)));
    CHECK(join(a, a) == a);
    CHECK(join(a, singleton_partition(n)) == a);
  }
}

TEST_CASE("sibling predicate") {
  const Graph p4 = path(4);
  CHECK(is_sibling(p4, singleton_partition(4)));
  CHECK(is_sibling(petersen(), singleton_partition(10)));

  const auto whole = check_sibling(p4, parts(4, {{0, 1, 2, 3}}));
  REQUIRE(whole.has_value());
  CHECK(whole->kind == SiblingViolation::Kind::P4InsidePart);
  CHECK(whole->witness == std::vector<Vertex>{0, 1, 2, 3});

  // 1 ~ 2 but 1 !~ 3: vertex 1 sees only part of {2, 3}.
  const auto halves = check_sibling(p4, parts(4, {{0, 1}, {2, 3}}));
  REQUIRE(halves.has_value());
  CHECK(halves->kind == SiblingViolation::Kind::MixedEdgesBetweenParts);
  CHECK(halves->witness == std::vector<Vertex>{1, 2, 3});

  CHECK_THROWS_AS(check_sibling(p4, singleton_partition(5)), GroundSetMismatch);
}

TEST_CASE("sibling check on a large part uses the decomposition route") {
  // 40 isolated vertices in one part next to a P4 component in its own part.
  std::vector<Edge> e{{40, 41}, {41, 42}, {42, 43}};
  const Graph g = Graph::from_edges(44, e);
  std::vector<std::size_t> labels(44, 0);
  for (Vertex v = 40; v < 44; ++v) labels[v] = 1;
  const auto p = Partition::from_labels(labels);
  const auto violation = check_sibling(g, p);
  REQUIRE(violation.has_value());
  CHECK(violation->witness == std::vector<Vertex>{40, 41, 42, 43});

  std::vector<std::size_t> big(44, 0);
  CHECK(check_sibling(g, Partition::from_labels(big))->kind == SiblingViolation::Kind::P4InsidePart);
  std::vector<std::size_t> split(44, 0);
  for (Vertex v = 40; v < 44; ++v) split[v] = v;
  CHECK(is_sibling(g, Partition::from_labels(split)));
}

TEST_CASE("quotient") {
  CHECK(quotient(petersen(), singleton_partition(10)) == petersen());
  CHECK(quotient(complete(4), parts(4, {{0, 1}, {2, 3}})) == complete(2));
  CHECK(quotient(star(3), parts(4, {{0}, {1, 2, 3}})) == complete(2));
  CHECK_THROWS_AS(quotient(path(4), parts(4, {{0, 1}, {2, 3}})), NotSiblingError);
  try {
    quotient(path(4), parts(4, {{0, 1, 2, 3}}));
    FAIL("expected NotSiblingError");
  } catch (const NotSiblingError& e) {
    CHECK(e.violation().kind == SiblingViolation::Kind::P4InsidePart);
  }
}

TEST_CASE("quotient sizes and twins inside sibling parts") {
  // For every sibling partition: the quotient has one vertex per part, and
  // same-part vertices are twins in g iff twins in the part's induced graph.
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : testkit::GraphCatalog(n)) {
      for (const auto& p : testkit::all_sibling_partitions(g)) {
        CHECK(quotient(g, p).order() == p.part_count());
        for (const auto& part : p.parts()) {
          if (part.size() < 2) continue;
          const Graph sub = induced_subgraph(g, part);
          for (std::size_t i = 0; i < part.size(); ++i) {
            for (std::size_t j = i + 1; j < part.size(); ++j) {
              const bool in_g = twin_kind(g, part[i], part[j]) != TwinKind::NotTwins;
              const bool in_sub =
                  twin_kind(sub, static_cast<Vertex>(i), static_cast<Vertex>(j)) != TwinKind::NotTwins;
              CHECK(in_g == in_sub);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("compose") {
  const auto inner = parts(5, {{0, 3}, {1}, {2, 4}});
  const auto outer = parts(3, {{0, 2}, {1}});
  CHECK(compose(inner, outer) == parts(5, {{0, 2, 3, 4}, {1}}));
}

TEST_CASE("partition text format") {
  const auto p = parts(5, {{0, 3}, {1}, {2, 4}});
  CHECK(write_partition(p) == "0 3\n1\n2 4\n");
  CHECK(parse_partition(write_partition(p)) == p);
  CHECK(parse_partition("4 2\n\n3 # comment\n0 1\n") == parts(5, {{0, 1}, {2, 4}, {3}}));
  CHECK_THROWS_AS(parse_partition("0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_partition("0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_partition("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_partition("0 1\n", 3), GroundSetMismatch);
}
