#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twinreduce/graph.hpp"
#include "twinreduce/partition.hpp"

namespace twinreduce {

enum class TwinKind { NotTwins, Open, Closed };

std::string to_string(TwinKind kind);

/// Open: u !~ v and N(u) = N(v). Closed: u ~ v and N(u)\{v} = N(v)\{u}.
/// Throws InvalidArgument if u == v or either is out of range.
TwinKind twin_kind(const Graph& g, Vertex u, Vertex v);

/// Maximal classes of mutual twins (restricted to one kind when `filter` is
/// Open or Closed); vertices without twins are singletons. Passing
/// TwinKind::NotTwins is the same as passing nothing.
Partition twin_classes(const Graph& g, std::optional<TwinKind> filter = std::nullopt);

bool is_twin_free(const Graph& g);

/// Choice of which twin pair to merge next.
struct MergePolicy {
  enum class Mode { Deterministic, Randomized };

  Mode mode = Mode::Deterministic;
  std::uint64_t seed = 0;

  /// Lexicographically first twin pair of the current quotient.
  static MergePolicy deterministic() { return {}; }
  /// A pseudo-random twin pair, reproducible for a given seed.
  static MergePolicy randomized(std::uint64_t seed) { return {Mode::Randomized, seed}; }
};

/// One merge: the quotient vertices for parts with minima `part_a` < `part_b`
/// were twins of the given kind and their parts were combined.
struct MergeStep {
  std::size_t index = 0;
  Vertex part_a = 0;
  Vertex part_b = 0;
  TwinKind kind = TwinKind::NotTwins;

  bool operator==(const MergeStep&) const = default;
};

struct ReductionTrace {
  std::size_t initial_order = 0;
  std::vector<MergeStep> steps;
  Partition final_partition;
};

struct ReductionResult {
  /// Twin-free quotient; vertex i is part i of `partition`.
  Graph reduced;
  /// The maximal sibling partition of the input.
  Partition partition;
  ReductionTrace trace;
};

/// Complete twin reduction, run on the (partition, current quotient) pair.
/// Only vertices whose quotient neighbourhood changed are re-examined after
/// each merge. Returns the reduced graph, the final partition of the
/// original vertex set, and the merge log.
ReductionResult complete_twin_reduction(const Graph& g,
                                        MergePolicy policy = MergePolicy::deterministic());

/// Partition produced by deterministic complete twin reduction.
Partition maximal_sibling_partition(const Graph& g);

/// Replays `steps` starting from singletons on `initial_order` points.
/// Throws InvalidArgument if a step names something that is not the minimum
/// of a current part, or names the same part twice. With `graph`, each
/// merge is additionally checked to join twins of the recorded kind in the
/// quotient at that point.
Partition replay_trace(const ReductionTrace& trace, const Graph* graph = nullptr);

/// Every intermediate partition of the trace, starting with singletons and
/// ending with the final partition.
std::vector<Partition> trace_prefixes(const ReductionTrace& trace);

/// "step <i> merge <minA> <minB> kind <open|closed>" lines followed by the
/// final partition in partition text format.
std::string write_trace(const ReductionTrace& trace);
ReductionTrace parse_trace(std::string_view text);

enum class StageKind { Open, Closed };

std::string to_string(StageKind kind);

struct Stage {
  StageKind kind = StageKind::Open;
  /// Sizes of all twin classes of the stage's input quotient (including
  /// singletons), in descending order.
  std::vector<std::size_t> class_sizes;
  std::size_t merges = 0;
  /// Vertex count of the quotient the stage acted on.
  std::size_t quotient_order = 0;
  /// Partition of the original vertex set after this stage.
  Partition cumulative;
};

struct StageReport {
  /// Stages that merged something, in execution order.
  std::vector<Stage> stages;
  Partition final_partition;
  Graph reduced;
};

/// Alternating Open / Closed twin-class reduction, starting with Open, until
/// a full Open + Closed round merges nothing.
StageReport staged_reduction(const Graph& g);

}  // namespace twinreduce
