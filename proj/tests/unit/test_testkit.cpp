#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "twinreduce/testkit.hpp"
#include "twinreduce/twins.hpp"

using namespace twinreduce;
using namespace fixtures;
namespace tk = twinreduce::testkit;

TEST_CASE("partition enumeration") {
  CHECK(tk::all_partitions(1).size() == 1);
  CHECK(tk::all_partitions(3).size() == 5);
  CHECK(tk::all_partitions(5).size() == 52);
  CHECK(tk::all_partitions(8).size() == 4140);
  CHECK_THROWS(tk::all_partitions(9));

  for (std::size_t n = 0; n <= 7; ++n) CHECK(tk::all_partitions(n).size() == tk::bell_number(n));
  const auto p6 = tk::all_partitions(6);
  std::set<std::string> distinct;
  for (const auto& p : p6) distinct.insert(write_partition(p));
  CHECK(distinct.size() == p6.size());
}

TEST_CASE("bell numbers") {
  CHECK(tk::bell_number(0) == 1);
  CHECK(tk::bell_number(1) == 1);
  CHECK(tk::bell_number(3) == 5);
  CHECK(tk::bell_number(5) == 52);
  CHECK(tk::bell_number(8) == 4140);
}

TEST_CASE("graph catalog") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const tk::GraphCatalog cat(n);
    CHECK(cat.size() == (std::uint64_t{1} << (n * (n - 1) / 2)));
    std::uint64_t count = 0;
    std::set<std::vector<Edge>> seen;
    for (const Graph& g : cat) {
      ++count;
      seen.insert(g.edges());
    }
    CHECK(count == cat.size());
    CHECK(seen.size() == cat.size());
  }
  CHECK(tk::GraphCatalog(3).at(0b111) == complete(3));
  CHECK(tk::GraphCatalog(4).at(0b100101) == path(4));
  CHECK_THROWS(tk::GraphCatalog(7));
}

TEST_CASE("sibling partition oracle examples") {
  CHECK(tk::brute_maximal_sibling(path(4)) == singleton_partition(4));
  CHECK(tk::brute_maximal_sibling(complete(3)) == Partition::from_parts(3, {{0, 1, 2}}));
  CHECK(tk::brute_maximal_sibling(path(3)) == Partition::from_parts(3, {{0, 1, 2}}));
  CHECK(tk::all_sibling_partitions(complete(2)).size() == 2);
  CHECK(tk::all_sibling_partitions(empty(2)).size() == 2);
  CHECK_THROWS(tk::brute_maximal_sibling(empty(8)));
}

TEST_CASE("every partition of an edgeless graph is sibling") {
  for (std::size_t n = 1; n <= 7; ++n) CHECK(tk::all_sibling_partitions(empty(n)).size() == tk::bell_number(n));
}

TEST_CASE("sibling partitions are join-closed") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : tk::GraphCatalog(n)) {
      const auto sib = tk::all_sibling_partitions(g);
      std::set<std::string> names;
      for (const auto& p : sib) names.insert(write_partition(p));
      for (std::size_t i = 0; i < sib.size(); ++i) {
        for (std::size_t j = i + 1; j < sib.size(); ++j) CHECK(names.contains(write_partition(join(sib[i], sib[j]))));
      }
    }
  }
}

TEST_CASE("oracle agrees with the reduction engine") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : tk::GraphCatalog(n)) CHECK(tk::brute_maximal_sibling(g) == maximal_sibling_partition(g));
  }
}
