#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twinreduce/graph.hpp"
#include "twinreduce/partition.hpp"
#include "twinreduce/twins.hpp"

namespace twinreduce {

using BigCount = boost::multiprecision::cpp_int;

struct SeriesStage {
  StageKind kind = StageKind::Open;
  std::vector<std::size_t> class_sizes;
  std::size_t merges = 0;
  /// Product of (class size)! over the stage's classes.
  BigCount factor_order = 1;
};

/// Combinatorial normal-series data from the staged reduction. No group is
/// materialised; `n_order` bounds |N| from above.
struct NormalSeriesReport {
  std::vector<SeriesStage> stages;
  BigCount n_order = 1;
  Graph reduced;
  Partition maximal_partition;
};

NormalSeriesReport normal_series_report(const Graph& g);

/// Largest graph accepted by verify_theorem3.
inline constexpr std::size_t kMaxVerifyVertices = 10;

/// |N|, where N is the set of automorphisms mapping every part of the
/// maximal sibling partition onto itself (the kernel of the action on the
/// twin-free quotient). Exhaustive; throws SizeGuardError above
/// kMaxOracleVertices.
std::uint64_t kernel_order(const Graph& g);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Theorem3Record {
  std::uint64_t aut_order = 0;
  std::uint64_t kernel_order = 0;
  std::uint64_t reduced_aut_order = 0;
  std::uint64_t first_stage_order = 0;
  std::uint64_t first_stage_expected = 0;
  /// kernel-subgroup, kernel-normal, quotient-embeds, first-stage-exact.
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Brute-force checks of the automorphism-group structure:
///  - N is a subgroup and is normal in Aut(g);
///  - |Aut(g)| / |N| divides |Aut(reduced graph)|;
///  - the automorphisms fixing every open twin class setwise number exactly
///    the product of (open class size)!.
/// Throws SizeGuardError above kMaxVerifyVertices.
Theorem3Record verify_theorem3(const Graph& g);

}  // namespace twinreduce
