#include "twinreduce/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <unordered_map>

#include "twinreduce/cograph.hpp"
#include "twinreduce/disjoint_set.hpp"

namespace twinreduce {

namespace {

// Parts of at most this size are checked for induced P4s directly; larger
// parts go through the cotree decomposition first.
constexpr std::size_t kDirectP4ScanLimit = 16;

void require_same_ground(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw GroundSetMismatch(std::string(what) + ": ground sets of size " + std::to_string(a) +
                            " and " + std::to_string(b));
  }
}

}  // namespace

Partition Partition::from_parts(std::size_t n, std::vector<std::vector<Vertex>> parts) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(n, kNone);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw InvalidArgument("partition: empty part");
    for (Vertex v : parts[i]) {
      if (v >= n) {
        throw InvalidArgument("partition: element " + std::to_string(v) + " outside ground set of size " +
                              std::to_string(n));
      }
      if (label[v] != kNone) throw InvalidArgument("partition: element " + std::to_string(v) + " repeated");
      label[v] = i;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] == kNone) throw InvalidArgument("partition: element " + std::to_string(v) + " not covered");
  }
  return from_labels(label);
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  p.part_of_.resize(labels.size());
  std::unordered_map<std::size_t, std::size_t> index;
  // Scanning vertices in ascending order numbers parts by their minimum.
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = index.try_emplace(labels[v], p.parts_.size());
    if (inserted) p.parts_.emplace_back();
    p.parts_[it->second].push_back(static_cast<Vertex>(v));
    p.part_of_[v] = it->second;
  }
  return p;
}

std::vector<std::size_t> Partition::part_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(parts_.size());
  for (const auto& part : parts_) out.push_back(part.size());
  return out;
}

Partition singleton_partition(std::size_t n) {
  if (n == 0) throw InvalidArgument("singleton_partition: empty ground set");
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return Partition::from_labels(labels);
}

bool is_finer(const Partition& fine, const Partition& coarse) {
  require_same_ground(fine.ground_size(), coarse.ground_size(), "is_finer");
  for (const auto& part : fine.parts()) {
    const auto target = coarse.part_of(part.front());
    for (Vertex v : part) {
      if (coarse.part_of(v) != target) return false;
    }
  }
  return true;
}

Partition join(const Partition& a, const Partition& b) {
  require_same_ground(a.ground_size(), b.ground_size(), "join");
  DisjointSet ds(a.ground_size());
  for (const auto* p : {&a, &b}) {
    for (const auto& part : p->parts()) {
      for (Vertex v : part) ds.unite(part.front(), v);
    }
  }
  const auto labels = ds.labels();
  return Partition::from_labels(labels);
}

Partition compose(const Partition& inner, const Partition& outer) {
  require_same_ground(inner.part_count(), outer.ground_size(), "compose");
  std::vector<std::size_t> labels(inner.ground_size());
  for (Vertex v = 0; v < labels.size(); ++v) labels[v] = outer.part_of(static_cast<Vertex>(inner.part_of(v)));
  return Partition::from_labels(labels);
}

std::optional<SiblingViolation> check_sibling(const Graph& g, const Partition& p) {
  require_same_ground(g.order(), p.ground_size(), "is_sibling");

  for (const auto& part : p.parts()) {
    if (part.size() < 4) continue;
    if (part.size() > kDirectP4ScanLimit && decomposes_as_cograph(g, part)) continue;
    if (auto path = find_induced_p4_within(g, part)) {
      return SiblingViolation{SiblingViolation::Kind::P4InsidePart,
                              std::vector<Vertex>(path->begin(), path->end())};
    }
  }

  // Rule (b): every vertex sees all or none of each other part.
  std::vector<std::size_t> seen(p.part_count(), 0);
  std::vector<std::size_t> touched;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto own = p.part_of(u);
    for (Vertex w : g.neighbours(u)) {
      const auto q = p.part_of(w);
      if (q == own) continue;
      if (seen[q]++ == 0) touched.push_back(q);
    }
    std::optional<std::size_t> bad;
    for (auto q : touched) {
      if (seen[q] != p.part(q).size() && (!bad || q < *bad)) bad = q;
    }
    for (auto q : touched) seen[q] = 0;
    touched.clear();
    if (bad) {
      const auto& other = p.part(*bad);
      const auto v = *std::find_if(other.begin(), other.end(), [&](Vertex x) { return g.adjacent(u, x); });
      const auto w = *std::find_if(other.begin(), other.end(), [&](Vertex x) { return !g.adjacent(u, x); });
      return SiblingViolation{SiblingViolation::Kind::MixedEdgesBetweenParts, {u, v, w}};
    }
  }
  return std::nullopt;
}

bool is_sibling(const Graph& g, const Partition& p) { return !check_sibling(g, p).has_value(); }

std::string to_string(SiblingViolation::Kind kind) {
  switch (kind) {
    case SiblingViolation::Kind::P4InsidePart:
      return "p4-inside-part";
    case SiblingViolation::Kind::MixedEdgesBetweenParts:
      return "mixed-edges-between-parts";
  }
  return "unknown";
}

std::string describe(const SiblingViolation& v) {
  std::string out = to_string(v.kind);
  for (Vertex x : v.witness) {
    out += ' ';
    out += std::to_string(x);
  }
  return out;
}

NotSiblingError::NotSiblingError(SiblingViolation violation)
    : Error("not a sibling partition: " + describe(violation)), violation_(std::move(violation)) {}

Graph quotient(const Graph& g, const Partition& p) {
  if (auto violation = check_sibling(g, p)) throw NotSiblingError(std::move(*violation));
  GraphBuilder b(p.part_count());
  for (auto [u, v] : g.edges()) {
    const auto pu = p.part_of(u);
    const auto pv = p.part_of(v);
    if (pu != pv) b.add_edge(static_cast<Vertex>(pu), static_cast<Vertex>(pv));
  }
  return std::move(b).build();
}

std::string write_partition(const Partition& p) {
  std::string out;
  for (const auto& part : p.parts()) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(part[i]);
    }
    out += '\n';
  }
  return out;
}

Partition parse_partition(std::string_view text, std::optional<std::size_t> ground_size) {
  std::vector<std::vector<Vertex>> parts;
  std::size_t line_no = 0;
  Vertex max_seen = 0;
  std::size_t count = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Vertex> part;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i == line.size()) break;
      Vertex v = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc{}) {
        throw ParseError("partition line " + std::to_string(line_no) + ": unparsable token");
      }
      i = static_cast<std::size_t>(ptr - line.data());
      if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
        throw ParseError("partition line " + std::to_string(line_no) + ": unparsable token");
      }
      part.push_back(v);
      max_seen = std::max(max_seen, v);
      ++count;
    }
    if (!part.empty()) parts.push_back(std::move(part));
  }
  if (parts.empty()) throw ParseError("partition: no parts");
  const std::size_t n = max_seen + 1;
  if (ground_size && *ground_size != n) {
    throw GroundSetMismatch("partition covers " + std::to_string(n) + " points, expected " +
                            std::to_string(*ground_size));
  }
  if (count != n) throw ParseError("partition: elements missing or repeated");
  try {
    return Partition::from_parts(n, std::move(parts));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace twinreduce
