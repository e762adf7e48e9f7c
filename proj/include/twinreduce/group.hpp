#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "twinreduce/graph.hpp"

namespace twinreduce {

/// Bijection of 0..m-1, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws GroupError unless `image` is a bijection of 0..size-1.
  explicit Permutation(std::vector<std::uint32_t> image);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return image_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return image_[x]; }
  std::span<const std::uint32_t> image() const { return image_; }

  /// Apply this permutation first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint-cycle notation over 0-based points, fixed points omitted;
  /// "()" for the identity.
  std::string to_cycles() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> image_;
};

/// Parses disjoint-cycle notation such as "(0 1 2)(3 4)" on `degree` points.
/// Points may be separated by spaces or commas.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Generator fixture: one permutation per line in cycle notation, blank
/// lines and '#' comments ignored. All generators get the common degree
/// (largest point mentioned) + 1.
std::vector<Permutation> parse_generators(std::string_view text);

inline constexpr std::size_t kDefaultGroupCap = 100000;

/// A permutation group, fully enumerated.
struct GroupElements {
  std::size_t degree = 0;
  /// Distinct elements in discovery order; the identity is element 0.
  std::vector<Permutation> elements;
  /// cyclic[i] = indices of the elements of <elements[i]>, ascending.
  std::vector<std::vector<std::uint32_t>> cyclic;

  std::size_t order() const { return elements.size(); }
  std::size_t element_order(std::size_t i) const { return cyclic[i].size(); }
  /// Index of `p`, if it is an element.
  std::optional<std::size_t> find(const Permutation& p) const;

  std::unordered_map<std::string, std::size_t> index;
};

/// Breadth-first closure of the generators from the identity. Throws
/// GroupError if the generators have different degrees, or if the closure
/// grows past `cap` elements.
GroupElements enumerate_group(std::span<const Permutation> generators,
                              std::size_t cap = kDefaultGroupCap);

/// x ~ y iff one is a power of the other.
Graph power_graph(const GroupElements& g);

/// x ~ y iff both lie in one cyclic subgroup. Built from the maximal cyclic
/// subgroups only.
Graph enhanced_power_graph(const GroupElements& g);

/// x ~ y iff xy = yx. Rows are split across `jobs` threads; the result does
/// not depend on the job count.
Graph commuting_graph(const GroupElements& g, unsigned jobs = 1);

enum class GroupGraphKind { Power, Enhanced, Commuting, Difference };

std::string to_string(GroupGraphKind kind);
std::optional<GroupGraphKind> parse_group_graph_kind(std::string_view name);

/// Dispatch on `kind`; Difference is the enhanced power graph minus the
/// power graph, with the edge containment checked.
Graph group_graph(const GroupElements& g, GroupGraphKind kind, unsigned jobs = 1);

}  // namespace twinreduce
