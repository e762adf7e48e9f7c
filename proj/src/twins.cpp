#include "twinreduce/twins.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <set>

#include "twinreduce/errors.hpp"

namespace twinreduce {

std::string to_string(TwinKind kind) {
  switch (kind) {
    case TwinKind::NotTwins:
      return "none";
    case TwinKind::Open:
      return "open";
    case TwinKind::Closed:
      return "closed";
  }
  return "unknown";
}

std::string to_string(StageKind kind) { return kind == StageKind::Open ? "open" : "closed"; }

TwinKind twin_kind(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw InvalidArgument("twin_kind: vertex out of range");
  if (u == v) throw InvalidArgument("twin_kind: u and v must be distinct");
  const bool adjacent = g.adjacent(u, v);
  auto nu = g.neighbours(u);
  auto nv = g.neighbours(v);
  if (!adjacent) {
    return std::equal(nu.begin(), nu.end(), nv.begin(), nv.end()) ? TwinKind::Open : TwinKind::NotTwins;
  }
  if (nu.size() != nv.size()) return TwinKind::NotTwins;
  // Compare N(u)\{v} with N(v)\{u} by a merged walk.
  auto a = nu.begin();
  auto b = nv.begin();
  while (true) {
    if (a != nu.end() && *a == v) ++a;
    if (b != nv.end() && *b == u) ++b;
    if (a == nu.end() || b == nv.end()) return (a == nu.end() && b == nv.end()) ? TwinKind::Closed : TwinKind::NotTwins;
    if (*a != *b) return TwinKind::NotTwins;
    ++a;
    ++b;
  }
}

namespace {

using NeighbourKey = std::vector<Vertex>;

NeighbourKey closed_key(std::span<const Vertex> nbrs, Vertex v) {
  NeighbourKey key(nbrs.begin(), nbrs.end());
  key.insert(std::upper_bound(key.begin(), key.end(), v), v);
  return key;
}

// Class labels for open (equal N(v)) and closed (equal N[v]) twin classes.
std::vector<std::size_t> class_labels(const Graph& g, TwinKind kind) {
  std::map<NeighbourKey, std::size_t> index;
  std::vector<std::size_t> labels(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nbrs = g.neighbours(v);
    NeighbourKey key = kind == TwinKind::Open ? NeighbourKey(nbrs.begin(), nbrs.end()) : closed_key(nbrs, v);
    labels[v] = index.try_emplace(std::move(key), index.size()).first->second;
  }
  return labels;
}

}  // namespace

Partition twin_classes(const Graph& g, std::optional<TwinKind> filter) {
  if (filter == TwinKind::Open || filter == TwinKind::Closed) {
    return Partition::from_labels(class_labels(g, *filter));
  }
  const auto open = Partition::from_labels(class_labels(g, TwinKind::Open));
  const auto closed = Partition::from_labels(class_labels(g, TwinKind::Closed));
  // A vertex never has both an open and a closed twin, so the join of the
  // two partitions just overlays their nontrivial classes.
  return join(open, closed);
}

bool is_twin_free(const Graph& g) {
  return twin_classes(g, TwinKind::Open).part_count() == g.order() &&
         twin_classes(g, TwinKind::Closed).part_count() == g.order();
}

namespace {

// Twin reduction state: the current quotient, with each vertex labelled by
// the minimum of its part, plus open/closed neighbourhood classes and the
// (min, second-min) pair of every nontrivial class.
class ReductionEngine {
 public:
  explicit ReductionEngine(const Graph& g)
      : adj_(g.order()), alive_(g.order(), true), members_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      auto nbrs = g.neighbours(v);
      adj_[v].assign(nbrs.begin(), nbrs.end());
      members_[v] = {v};
    }
    for (Vertex v = 0; v < g.order(); ++v) insert(v);
  }

  bool has_twins() const { return !candidates_.empty(); }

  std::pair<Vertex, Vertex> first_pair() const { return *candidates_.begin(); }

  std::pair<Vertex, Vertex> random_pair(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> pick_class(0, candidates_.size() - 1);
    const Vertex rep = std::next(candidates_.begin(), static_cast<std::ptrdiff_t>(pick_class(rng)))->first;
    const auto& cls = class_of(rep);
    std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 1);
    const auto i = pick(rng);
    auto j = pick(rng);
    while (j == i) j = pick(rng);
    Vertex a = *std::next(cls.begin(), static_cast<std::ptrdiff_t>(i));
    Vertex b = *std::next(cls.begin(), static_cast<std::ptrdiff_t>(j));
    if (b < a) std::swap(a, b);
    return {a, b};
  }

  bool adjacent_in_quotient(std::pair<Vertex, Vertex> p) const {
    return std::binary_search(adj_[p.first].begin(), adj_[p.first].end(), p.second);
  }

  // Merges part b into part a (a < b, twins in the current quotient).
  TwinKind merge(Vertex a, Vertex b) {
    const TwinKind kind = adjacent_in_quotient({a, b}) ? TwinKind::Closed : TwinKind::Open;
    std::vector<Vertex> affected(adj_[b].begin(), adj_[b].end());
    affected.push_back(a);
    affected.push_back(b);
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());

    for (Vertex x : affected) erase(x);
    for (Vertex x : adj_[b]) {
      auto& row = adj_[x];
      row.erase(std::lower_bound(row.begin(), row.end(), b));
    }
    adj_[b].clear();
    alive_[b] = false;
    for (Vertex x : affected) {
      if (x != b) insert(x);
    }
    auto& target = members_[a];
    target.insert(target.end(), members_[b].begin(), members_[b].end());
    members_[b].clear();
    return kind;
  }

  Partition partition() const {
    std::vector<std::size_t> labels(alive_.size());
    for (Vertex v = 0; v < alive_.size(); ++v) {
      if (!alive_[v]) continue;
      for (Vertex x : members_[v]) labels[x] = v;
    }
    return Partition::from_labels(labels);
  }

  Graph quotient_graph() const {
    std::vector<Vertex> index(alive_.size(), 0);
    Vertex next = 0;
    for (Vertex v = 0; v < alive_.size(); ++v) {
      if (alive_[v]) index[v] = next++;
    }
    GraphBuilder b(next);
    for (Vertex v = 0; v < alive_.size(); ++v) {
      if (!alive_[v]) continue;
      for (Vertex w : adj_[v]) {
        if (v < w) b.add_edge(index[v], index[w]);
      }
    }
    return std::move(b).build();
  }

 private:
  using ClassMap = std::map<NeighbourKey, std::set<Vertex>>;

  const std::set<Vertex>& class_of(Vertex v) const {
    auto it = open_.find(adj_[v]);
    if (it != open_.end() && it->second.size() >= 2) return it->second;
    return closed_.at(closed_key(adj_[v], v));
  }

  void drop_candidate(const std::set<Vertex>& cls) {
    if (cls.size() >= 2) candidates_.erase({*cls.begin(), *std::next(cls.begin())});
  }
  void add_candidate(const std::set<Vertex>& cls) {
    if (cls.size() >= 2) candidates_.insert({*cls.begin(), *std::next(cls.begin())});
  }

  void insert_into(ClassMap& map, NeighbourKey key, Vertex v) {
    auto& cls = map[std::move(key)];
    drop_candidate(cls);
    cls.insert(v);
    add_candidate(cls);
  }

  void erase_from(ClassMap& map, const NeighbourKey& key, Vertex v) {
    auto it = map.find(key);
    auto& cls = it->second;
    drop_candidate(cls);
    cls.erase(v);
    add_candidate(cls);
    if (cls.empty()) map.erase(it);
  }

  void insert(Vertex v) {
    insert_into(open_, adj_[v], v);
    insert_into(closed_, closed_key(adj_[v], v), v);
  }

  void erase(Vertex v) {
    erase_from(open_, adj_[v], v);
    erase_from(closed_, closed_key(adj_[v], v), v);
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<bool> alive_;
  std::vector<std::vector<Vertex>> members_;
  ClassMap open_;
  ClassMap closed_;
  std::set<std::pair<Vertex, Vertex>> candidates_;
};

}  // namespace

ReductionResult complete_twin_reduction(const Graph& g, MergePolicy policy) {
  ReductionEngine engine(g);
  ReductionTrace trace;
  trace.initial_order = g.order();
  std::mt19937_64 rng(policy.seed);
  while (engine.has_twins()) {
    const auto [a, b] = policy.mode == MergePolicy::Mode::Deterministic ? engine.first_pair()
                                                                        : engine.random_pair(rng);
    const auto kind = engine.merge(a, b);
    trace.steps.push_back(MergeStep{trace.steps.size(), a, b, kind});
  }
  ReductionResult result;
  result.partition = engine.partition();
  result.reduced = engine.quotient_graph();
  trace.final_partition = result.partition;
  result.trace = std::move(trace);
  return result;
}

Partition maximal_sibling_partition(const Graph& g) { return complete_twin_reduction(g).partition; }

namespace {

template <typename OnStep>
Partition replay(const ReductionTrace& trace, const Graph* graph, OnStep&& on_step) {
  const auto n = trace.initial_order;
  if (graph != nullptr && graph->order() != n) {
    throw GroundSetMismatch("replay_trace: graph has " + std::to_string(graph->order()) +
                            " vertices, trace starts from " + std::to_string(n));
  }
  std::vector<std::size_t> label(n);
  std::vector<bool> alive(n, true);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const auto& step = trace.steps[s];
    const auto a = std::min(step.part_a, step.part_b);
    const auto b = std::max(step.part_a, step.part_b);
    if (step.index != s) throw InvalidArgument("replay_trace: step " + std::to_string(s) + " has index " + std::to_string(step.index));
    if (b >= n || a == b || !alive[a] || !alive[b]) {
      throw InvalidArgument("replay_trace: step " + std::to_string(s) + " does not name two current parts");
    }
    if (graph != nullptr) {
      const auto current = Partition::from_labels(label);
      const auto q = quotient(*graph, current);
      const auto kind = twin_kind(q, static_cast<Vertex>(current.part_of(a)),
                                  static_cast<Vertex>(current.part_of(b)));
      if (kind != step.kind) {
        throw InvalidArgument("replay_trace: step " + std::to_string(s) + " merges parts that are " +
                              to_string(kind) + " twins, trace says " + to_string(step.kind));
      }
    }
    for (auto& l : label) {
      if (l == b) l = a;
    }
    alive[b] = false;
    on_step(label);
  }
  return Partition::from_labels(label);
}

}  // namespace

Partition replay_trace(const ReductionTrace& trace, const Graph* graph) {
  return replay(trace, graph, [](const std::vector<std::size_t>&) {});
}

std::vector<Partition> trace_prefixes(const ReductionTrace& trace) {
  std::vector<Partition> out;
  std::vector<std::size_t> start(trace.initial_order);
  for (std::size_t i = 0; i < start.size(); ++i) start[i] = i;
  out.push_back(Partition::from_labels(start));
  replay(trace, nullptr, [&](const std::vector<std::size_t>& label) { out.push_back(Partition::from_labels(label)); });
  return out;
}

std::string write_trace(const ReductionTrace& trace) {
  std::string out;
  for (const auto& step : trace.steps) {
    out += "step " + std::to_string(step.index) + " merge " + std::to_string(step.part_a) + " " +
           std::to_string(step.part_b) + " kind " + to_string(step.kind) + "\n";
  }
  out += write_partition(trace.final_partition);
  return out;
}

ReductionTrace parse_trace(std::string_view text) {
  ReductionTrace trace;
  std::string partition_text;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.starts_with("step")) {
      partition_text.append(line);
      partition_text.push_back('\n');
      continue;
    }
    if (!partition_text.empty() && partition_text.find_first_not_of(" \t\r\n") != std::string::npos) {
      throw ParseError("trace line " + std::to_string(line_no) + ": step after partition");
    }
    std::vector<std::string_view> tok;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const auto start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) tok.push_back(line.substr(start, i - start));
    }
    auto number = [&](std::string_view t) {
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ParseError("trace line " + std::to_string(line_no) + ": bad number '" + std::string(t) + "'");
      }
      return v;
    };
    if (tok.size() != 7 || tok[0] != "step" || tok[2] != "merge" || tok[5] != "kind") {
      throw ParseError("trace line " + std::to_string(line_no) + ": expected 'step <i> merge <a> <b> kind <k>'");
    }
    MergeStep step;
    step.index = number(tok[1]);
    step.part_a = static_cast<Vertex>(number(tok[3]));
    step.part_b = static_cast<Vertex>(number(tok[4]));
    if (tok[6] == "open") {
      step.kind = TwinKind::Open;
    } else if (tok[6] == "closed") {
      step.kind = TwinKind::Closed;
    } else {
      throw ParseError("trace line " + std::to_string(line_no) + ": unknown twin kind '" + std::string(tok[6]) + "'");
    }
    trace.steps.push_back(step);
  }
  trace.final_partition = parse_partition(partition_text);
  trace.initial_order = trace.final_partition.ground_size();
  return trace;
}

StageReport staged_reduction(const Graph& g) {
  StageReport report;
  Graph current = g;
  std::vector<std::size_t> identity(g.order());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  Partition cumulative = Partition::from_labels(identity);

  auto run_stage = [&](StageKind kind) {
    const auto classes = twin_classes(current, kind == StageKind::Open ? TwinKind::Open : TwinKind::Closed);
    const auto merges = current.order() - classes.part_count();
    if (merges == 0) return false;
    Stage stage;
    stage.kind = kind;
    stage.class_sizes = classes.part_sizes();
    std::sort(stage.class_sizes.begin(), stage.class_sizes.end(), std::greater<>());
    stage.merges = merges;
    stage.quotient_order = current.order();
    current = quotient(current, classes);
    cumulative = compose(cumulative, classes);
    stage.cumulative = cumulative;
    report.stages.push_back(std::move(stage));
    return true;
  };

  while (true) {
    const bool open = run_stage(StageKind::Open);
    const bool closed = run_stage(StageKind::Closed);
    if (!open && !closed) break;
  }
  report.final_partition = cumulative;
  report.reduced = std::move(current);
  return report;
}

}  // namespace twinreduce
