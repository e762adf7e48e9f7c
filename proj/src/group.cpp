#include "twinreduce/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <thread>

#include "twinreduce/errors.hpp"

namespace twinreduce {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto x : image_) {
    if (x >= image_.size() || hit[x]) throw GroupError("permutation image is not a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> image(degree);
  for (std::size_t i = 0; i < degree; ++i) image[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(image));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw GroupError("composing permutations of different degree");
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out.image_[i] = next.image_[image_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out.image_[image_[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(x);
      seen[x] = true;
      x = image_[x];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

// Cycles as lists of points; validates syntax only.
std::vector<std::vector<std::uint32_t>> read_cycles(std::string_view text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',' || text[i] == '\r')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("cycle notation: expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip();
      if (i >= text.size()) throw ParseError("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::uint32_t x = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), x);
      if (ec != std::errc{}) throw ParseError("cycle notation: bad point at offset " + std::to_string(i));
      i = static_cast<std::size_t>(ptr - text.data());
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
    skip();
  }
  return cycles;
}

Permutation from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles, std::size_t degree) {
  std::vector<std::uint32_t> image(degree);
  for (std::size_t i = 0; i < degree; ++i) image[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= degree) throw ParseError("cycle notation: point " + std::to_string(c[k]) + " out of range");
      if (used[c[k]]) throw ParseError("cycle notation: point " + std::to_string(c[k]) + " repeated");
      used[c[k]] = true;
      image[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(image));
}

std::string key_of(std::span<const std::uint32_t> image) {
  return std::string(reinterpret_cast<const char*>(image.data()), image.size_bytes());
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  return from_cycles(read_cycles(text), degree);
}

std::vector<Permutation> parse_generators(std::string_view text) {
  std::vector<std::vector<std::vector<std::uint32_t>>> lines;
  std::size_t degree = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto cycles = read_cycles(line);
    for (const auto& c : cycles) {
      for (auto x : c) degree = std::max<std::size_t>(degree, x + 1);
    }
    lines.push_back(std::move(cycles));
  }
  if (lines.empty()) throw ParseError("generator file: no generators");
  std::vector<Permutation> out;
  for (const auto& cycles : lines) out.push_back(from_cycles(cycles, degree));
  return out;
}

std::optional<std::size_t> GroupElements::find(const Permutation& p) const {
  auto it = index.find(key_of(p.image()));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

GroupElements enumerate_group(std::span<const Permutation> generators, std::size_t cap) {
  GroupElements g;
  g.degree = generators.empty() ? 0 : generators.front().degree();
  for (const auto& s : generators) {
    if (s.degree() != g.degree) throw GroupError("generators have different degrees");
  }
  auto add = [&](Permutation p) {
    auto [it, inserted] = g.index.try_emplace(key_of(p.image()), g.elements.size());
    if (!inserted) return false;
    if (g.elements.size() >= cap) {
      throw GroupError("group closure exceeds the cap of " + std::to_string(cap) + " elements");
    }
    g.elements.push_back(std::move(p));
    return true;
  };

  add(Permutation::identity(g.degree));
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (const auto& s : generators) add(g.elements[head].then(s));
  }

  g.cyclic.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto& members = g.cyclic[i];
    Permutation power = g.elements[i];
    members.push_back(static_cast<std::uint32_t>(i));
    while (!power.is_identity()) {
      power = power.then(g.elements[i]);
      members.push_back(static_cast<std::uint32_t>(*g.find(power)));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  return g;
}

Graph power_graph(const GroupElements& g) {
  GraphBuilder b(g.order());
  for (std::size_t y = 0; y < g.order(); ++y) {
    for (auto x : g.cyclic[y]) {
      if (x != y) b.add_edge(x, static_cast<Vertex>(y));
    }
  }
  return std::move(b).build();
}

Graph enhanced_power_graph(const GroupElements& g) {
  const auto n = g.order();
  // <x> is maximal unless x lies in a cyclic subgroup of larger order.
  std::vector<bool> maximal(n, true);
  for (std::size_t y = 0; y < n; ++y) {
    for (auto x : g.cyclic[y]) {
      if (g.element_order(x) < g.element_order(y)) maximal[x] = false;
    }
  }
  GraphBuilder b(n);
  for (std::size_t y = 0; y < n; ++y) {
    if (!maximal[y]) continue;
    const auto& members = g.cyclic[y];
    // Visit each maximal subgroup once, from its smallest-index generator.
    const bool first_generator = std::none_of(members.begin(), members.end(), [&](std::uint32_t x) {
      return x < y && g.element_order(x) == g.element_order(y);
    });
    if (!first_generator) continue;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) b.add_edge(members[i], members[j]);
    }
  }
  return std::move(b).build();
}

Graph commuting_graph(const GroupElements& g, unsigned jobs) {
  const auto n = g.order();
  const auto m = g.degree;
  std::vector<std::uint32_t> table(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(g.elements[i].image().begin(), g.elements[i].image().end(), table.begin() + i * m);
  }
  jobs = std::max(1U, jobs);
  std::vector<std::vector<Edge>> found(jobs);
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < n; i += jobs) {
      const auto* a = table.data() + i * m;
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto* b = table.data() + j * m;
        bool commute = true;
        for (std::size_t p = 0; p < m && commute; ++p) commute = a[b[p]] == b[a[p]];
        if (commute) found[t].emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  GraphBuilder b(n);
  for (const auto& edges : found) {
    for (auto [u, v] : edges) b.add_edge(u, v);
  }
  return std::move(b).build();
}

std::string to_string(GroupGraphKind kind) {
  switch (kind) {
    case GroupGraphKind::Power:
      return "power";
    case GroupGraphKind::Enhanced:
      return "enhanced";
    case GroupGraphKind::Commuting:
      return "commuting";
    case GroupGraphKind::Difference:
      return "difference";
  }
  return "unknown";
}

std::optional<GroupGraphKind> parse_group_graph_kind(std::string_view name) {
  for (auto k : {GroupGraphKind::Power, GroupGraphKind::Enhanced, GroupGraphKind::Commuting,
                 GroupGraphKind::Difference}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

Graph group_graph(const GroupElements& g, GroupGraphKind kind, unsigned jobs) {
  switch (kind) {
    case GroupGraphKind::Power:
      return power_graph(g);
    case GroupGraphKind::Enhanced:
      return enhanced_power_graph(g);
    case GroupGraphKind::Commuting:
      return commuting_graph(g, jobs);
    case GroupGraphKind::Difference:
      return graph_difference(enhanced_power_graph(g), power_graph(g), /*require_subset=*/true);
  }
  throw InvalidArgument("unknown group graph kind");
}

}  // namespace twinreduce
