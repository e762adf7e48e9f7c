#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twinreduce/errors.hpp"
#include "twinreduce/graph.hpp"

namespace twinreduce {

/// Set partition of {0, ..., n-1} in canonical form: each part ascending,
/// parts ordered by their minimum element. Equality is structural.
class Partition {
 public:
  Partition() = default;

  /// Canonicalises `parts`; throws InvalidArgument unless they are nonempty,
  /// pairwise disjoint and cover 0..n-1.
  static Partition from_parts(std::size_t n, std::vector<std::vector<Vertex>> parts);

  /// Partition whose parts are the fibres of `labels` (any label values).
  static Partition from_labels(std::span<const std::size_t> labels);

  std::size_t ground_size() const { return part_of_.size(); }
  std::size_t part_count() const { return parts_.size(); }
  const std::vector<std::vector<Vertex>>& parts() const { return parts_; }
  const std::vector<Vertex>& part(std::size_t i) const { return parts_[i]; }
  /// Index of the part containing v.
  std::size_t part_of(Vertex v) const { return part_of_[v]; }

  /// Part sizes, in part order.
  std::vector<std::size_t> part_sizes() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<std::vector<Vertex>> parts_;
  std::vector<std::size_t> part_of_;
};

/// n parts of size one. Throws InvalidArgument for n = 0.
Partition singleton_partition(std::size_t n);

/// True iff every part of `fine` lies inside some part of `coarse`.
bool is_finer(const Partition& fine, const Partition& coarse);

/// Finest partition coarser than both arguments.
Partition join(const Partition& a, const Partition& b);

/// Composes a partition `outer` of the parts of `inner` (i.e. of the vertices
/// of the quotient by `inner`) into a partition of the original ground set.
Partition compose(const Partition& inner, const Partition& outer);

struct SiblingViolation {
  enum class Kind { P4InsidePart, MixedEdgesBetweenParts };

  Kind kind;
  /// P4InsidePart: the path a-b-c-d. MixedEdgesBetweenParts: (u, v, w) with
  /// u in one part, v and w in another, u ~ v and u !~ w.
  std::vector<Vertex> witness;

  bool operator==(const SiblingViolation&) const = default;
};

/// First violation of the sibling rules in scan order, or nullopt if `p` is
/// a sibling partition of `g`. Parts are scanned for induced P4s first (in
/// part order); then vertices ascending against every other part in part
/// order.
std::optional<SiblingViolation> check_sibling(const Graph& g, const Partition& p);
bool is_sibling(const Graph& g, const Partition& p);

std::string to_string(SiblingViolation::Kind kind);
std::string describe(const SiblingViolation& v);

/// Thrown by `quotient` when the partition is not a sibling partition.
class NotSiblingError : public Error {
 public:
  explicit NotSiblingError(SiblingViolation violation);
  const SiblingViolation& violation() const { return violation_; }

 private:
  SiblingViolation violation_;
};

/// Shrinks every part of a sibling partition to one vertex. Vertex i of the
/// result is part i of `p`.
Graph quotient(const Graph& g, const Partition& p);

/// One part per line, space-separated.
std::string write_partition(const Partition& p);
/// Reads the text form. With `ground_size`, the parsed partition must cover
/// exactly that many points (else GroundSetMismatch).
Partition parse_partition(std::string_view text,
                          std::optional<std::size_t> ground_size = std::nullopt);

}  // namespace twinreduce
