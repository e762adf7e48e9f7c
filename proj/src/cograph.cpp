#include "twinreduce/cograph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "twinreduce/errors.hpp"
#include "twinreduce/twins.hpp"

namespace twinreduce {

std::optional<P4> find_induced_p4_within(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> verts(subset.begin(), subset.end());
  std::sort(verts.begin(), verts.end());
  std::vector<bool> in(g.order(), false);
  for (Vertex v : verts) {
    if (v >= g.order()) throw InvalidArgument("find_induced_p4: vertex out of range");
    in[v] = true;
  }
  for (Vertex a : verts) {
    for (Vertex b : g.neighbours(a)) {
      if (!in[b]) continue;
      for (Vertex c : g.neighbours(b)) {
        if (!in[c] || c == a || g.adjacent(a, c)) continue;
        for (Vertex d : g.neighbours(c)) {
          if (!in[d] || d == b || d == a || g.adjacent(a, d) || g.adjacent(b, d)) continue;
          return P4{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<P4> find_induced_p4(const Graph& g) {
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return find_induced_p4_within(g, all);
}

bool is_cograph(const Graph& g) {
  if (g.order() == 0) return true;
  return complete_twin_reduction(g).reduced.order() == 1;
}

Vertex Cotree::min_leaf() const {
  if (kind == Kind::Leaf) return vertex;
  Vertex m = children.front().min_leaf();
  for (const auto& c : children) m = std::min(m, c.min_leaf());
  return m;
}

std::size_t Cotree::leaf_count() const {
  if (kind == Kind::Leaf) return 1;
  std::size_t s = 0;
  for (const auto& c : children) s += c.leaf_count();
  return s;
}

namespace {

// One level of the cograph decomposition of g[S]: the components of g[S]
// if there are several, else the components of its complement, else
// nothing (S is a prime set or a single vertex).
struct Split {
  Cotree::Kind kind = Cotree::Kind::Leaf;
  std::vector<std::vector<Vertex>> blocks;
};

class Decomposer {
 public:
  explicit Decomposer(const Graph& g) : g_(g), mark_(g.order(), 0) {}

  // `set` must be sorted ascending; blocks come out sorted and ordered by
  // minimum.
  Split split(const std::vector<Vertex>& set) {
    Split out;
    if (set.size() < 2) return out;
    auto components = components_of(set, /*complemented=*/false);
    if (components.size() > 1) {
      out.kind = Cotree::Kind::Union;
      out.blocks = std::move(components);
      return out;
    }
    auto co = components_of(set, /*complemented=*/true);
    if (co.size() > 1) {
      out.kind = Cotree::Kind::Join;
      out.blocks = std::move(co);
    }
    return out;
  }

 private:
  std::vector<std::vector<Vertex>> components_of(const std::vector<Vertex>& set, bool complemented) {
    std::vector<std::vector<Vertex>> comps;
    const auto member = ++epoch_;
    for (Vertex v : set) mark_[v] = member;
    const auto done = ++epoch_;
    std::vector<Vertex> stack;

    if (!complemented) {
      for (Vertex s : set) {
        if (mark_[s] != member) continue;
        std::vector<Vertex> comp;
        mark_[s] = done;
        stack.push_back(s);
        while (!stack.empty()) {
          const Vertex x = stack.back();
          stack.pop_back();
          comp.push_back(x);
          for (Vertex y : g_.neighbours(x)) {
            if (mark_[y] == member) {
              mark_[y] = done;
              stack.push_back(y);
            }
          }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      return comps;
    }

    // Complement BFS: each scan of the unvisited list either removes a
    // vertex or is paid for by an edge of g[S].
    std::vector<Vertex> unvisited(set);
    std::vector<Vertex> keep;
    while (!unvisited.empty()) {
      std::vector<Vertex> comp;
      stack.push_back(unvisited.front());
      unvisited.erase(unvisited.begin());
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        keep.clear();
        for (Vertex y : unvisited) {
          if (g_.adjacent(x, y)) {
            keep.push_back(y);
          } else {
            stack.push_back(y);
          }
        }
        unvisited.swap(keep);
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
  }

  const Graph& g_;
  std::vector<std::size_t> mark_;
  std::size_t epoch_ = 0;
};

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> out(n);
  for (Vertex v = 0; v < n; ++v) out[v] = v;
  return out;
}

}  // namespace

std::variant<Cotree, NotCograph> build_cotree(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("build_cotree: graph has no vertices");
  Decomposer dec(g);
  bool prime = false;

  // Explicit stack: deep threshold-like graphs would otherwise recurse once
  // per vertex.
  Cotree root;
  struct Work {
    Cotree* node;
    std::vector<Vertex> set;
  };
  std::vector<Work> work;
  work.push_back({&root, all_vertices(g.order())});
  while (!work.empty() && !prime) {
    Work item = std::move(work.back());
    work.pop_back();
    if (item.set.size() == 1) {
      *item.node = Cotree::leaf(item.set.front());
      continue;
    }
    Split s = dec.split(item.set);
    if (s.blocks.empty()) {
      prime = true;
      break;
    }
    item.node->kind = s.kind;
    item.node->children.resize(s.blocks.size());
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
      work.push_back({&item.node->children[i], std::move(s.blocks[i])});
    }
  }
  if (!prime) return root;
  if (auto witness = find_induced_p4(g)) return NotCograph{*witness};
  throw std::logic_error("build_cotree: prime vertex set without an induced P4");
}

bool decomposes_as_cograph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> start(subset.begin(), subset.end());
  std::sort(start.begin(), start.end());
  for (Vertex v : start) {
    if (v >= g.order()) throw InvalidArgument("decomposes_as_cograph: vertex out of range");
  }
  Decomposer dec(g);
  std::vector<std::vector<Vertex>> work;
  work.push_back(std::move(start));
  while (!work.empty()) {
    auto set = std::move(work.back());
    work.pop_back();
    if (set.size() < 2) continue;
    Split s = dec.split(set);
    if (s.blocks.empty()) return false;
    for (auto& b : s.blocks) work.push_back(std::move(b));
  }
  return true;
}

namespace {

void validate(const Cotree& t, std::optional<Cotree::Kind> parent, std::vector<Vertex>& leaves) {
  if (t.kind == Cotree::Kind::Leaf) {
    if (!t.children.empty()) throw InvalidArgument("cotree: leaf with children");
    leaves.push_back(t.vertex);
    return;
  }
  if (t.children.size() < 2) throw InvalidArgument("cotree: internal node with fewer than two children");
  if (parent == t.kind) throw InvalidArgument("cotree: labels do not alternate");
  for (const auto& c : t.children) validate(c, t.kind, leaves);
}

void collect_leaves(const Cotree& t, std::vector<Vertex>& out) {
  if (t.kind == Cotree::Kind::Leaf) {
    out.push_back(t.vertex);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

void add_join_edges(const Cotree& t, GraphBuilder& b) {
  if (t.kind == Cotree::Kind::Leaf) return;
  if (t.kind == Cotree::Kind::Join) {
    std::vector<std::vector<Vertex>> leaves(t.children.size());
    for (std::size_t i = 0; i < t.children.size(); ++i) collect_leaves(t.children[i], leaves[i]);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        for (Vertex u : leaves[i]) {
          for (Vertex v : leaves[j]) b.add_edge(u, v);
        }
      }
    }
  }
  for (const auto& c : t.children) add_join_edges(c, b);
}

}  // namespace

Graph cotree_to_graph(const Cotree& t) {
  std::vector<Vertex> leaves;
  validate(t, std::nullopt, leaves);
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i] != i) throw InvalidArgument("cotree: leaves are not exactly 0..n-1");
  }
  GraphBuilder b(leaves.size());
  add_join_edges(t, b);
  return std::move(b).build();
}

namespace {

void write(const Cotree& t, std::string& out) {
  if (t.kind == Cotree::Kind::Leaf) {
    out += std::to_string(t.vertex);
    return;
  }
  out += t.kind == Cotree::Kind::Union ? "U(" : "J(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) out += ',';
    write(t.children[i], out);
  }
  out += ')';
}

class CotreeParser {
 public:
  explicit CotreeParser(std::string_view text) : text_(text) {}

  Cotree parse() {
    Cotree t = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cotree at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\n' || text_[pos_] == '\r')) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Cotree node() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'U' || c == 'J') {
      ++pos_;
      expect('(');
      Cotree t;
      t.kind = c == 'U' ? Cotree::Kind::Union : Cotree::Kind::Join;
      t.children.push_back(node());
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        t.children.push_back(node());
        skip_space();
      }
      expect(')');
      return t;
    }
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("expected a vertex index, 'U(' or 'J('");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return Cotree::leaf(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string write_cotree(const Cotree& t) {
  std::string out;
  write(t, out);
  return out;
}

Cotree parse_cotree(std::string_view text) { return CotreeParser(text).parse(); }

}  // namespace twinreduce
