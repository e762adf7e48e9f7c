#include "twinreduce/aut_structure.hpp"

#include <functional>
#include <optional>
#include <span>
#include <unordered_set>

#include "twinreduce/errors.hpp"
#include "twinreduce/oracle.hpp"

namespace twinreduce {

namespace {

BigCount factorial(std::size_t k) {
  BigCount f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// Permutations of at most 16 points packed four bits per point.
using Packed = std::uint64_t;

Packed pack(std::span<const Vertex> image) {
  Packed p = 0;
  for (std::size_t i = 0; i < image.size(); ++i) p |= Packed{image[i]} << (4 * i);
  return p;
}

Vertex at(Packed p, std::size_t i) { return static_cast<Vertex>((p >> (4 * i)) & 0xF); }

// Apply a, then b.
Packed compose(Packed a, Packed b, std::size_t n) {
  Packed out = 0;
  for (std::size_t i = 0; i < n; ++i) out |= Packed{at(b, at(a, i))} << (4 * i);
  return out;
}

Packed invert(Packed a, std::size_t n) {
  Packed out = 0;
  for (std::size_t i = 0; i < n; ++i) out |= Packed{i} << (4 * at(a, i));
  return out;
}

std::string cycles_of(Packed p, std::size_t n) {
  std::vector<Vertex> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = at(p, i);
  std::string out;
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || image[s] == s) continue;
    out += '(';
    Vertex x = s;
    do {
      if (x != s) out += ' ';
      out += std::to_string(x);
      seen[x] = true;
      x = image[x];
    } while (x != s);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// True iff the permutation maps every part of `p` onto itself.
bool preserves_parts(Packed perm, const Partition& p) {
  for (Vertex v = 0; v < p.ground_size(); ++v) {
    if (p.part_of(at(perm, v)) != p.part_of(v)) return false;
  }
  return true;
}

struct GeneratedSubgroup {
  std::vector<Packed> generators;
  std::unordered_set<Packed> elements;
  /// First generated element failing the membership predicate, if any.
  std::optional<Packed> escape;
};

// Greedily picks generators from `members` until their closure covers all
// of them. Every element produced by the closure is tested against
// `member`, which is how a non-subgroup would be caught.
GeneratedSubgroup generate(const std::vector<Packed>& members, std::size_t n,
                           const std::function<bool(Packed)>& member) {
  GeneratedSubgroup h;
  const Packed identity = [&] {
    Packed id = 0;
    for (std::size_t i = 0; i < n; ++i) id |= Packed{i} << (4 * i);
    return id;
  }();
  h.elements.insert(identity);
  for (Packed candidate : members) {
    if (h.elements.contains(candidate)) continue;
    h.generators.push_back(candidate);
    std::vector<Packed> queue(h.elements.begin(), h.elements.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Packed s : h.generators) {
        const Packed next = compose(queue[head], s, n);
        if (h.elements.insert(next).second) {
          if (!h.escape && !member(next)) h.escape = next;
          queue.push_back(next);
        }
      }
    }
  }
  return h;
}

std::vector<Packed> all_automorphisms(const Graph& g) {
  std::vector<Packed> out;
  for_each_automorphism(g, [&](std::span<const Vertex> image) { out.push_back(pack(image)); });
  return out;
}

}  // namespace

NormalSeriesReport normal_series_report(const Graph& g) {
  auto staged = staged_reduction(g);
  NormalSeriesReport report;
  for (auto& s : staged.stages) {
    SeriesStage stage;
    stage.kind = s.kind;
    stage.class_sizes = s.class_sizes;
    stage.merges = s.merges;
    for (auto size : s.class_sizes) stage.factor_order *= factorial(size);
    report.n_order *= stage.factor_order;
    report.stages.push_back(std::move(stage));
  }
  report.reduced = std::move(staged.reduced);
  report.maximal_partition = std::move(staged.final_partition);
  return report;
}

std::uint64_t kernel_order(const Graph& g) {
  if (g.order() == 0) return 1;
  const auto maximal = maximal_sibling_partition(g);
  std::uint64_t count = 0;
  for_each_automorphism(g, [&](std::span<const Vertex> image) {
    for (Vertex v = 0; v < image.size(); ++v) {
      if (maximal.part_of(image[v]) != maximal.part_of(v)) return;
    }
    ++count;
  });
  return count;
}

bool Theorem3Record::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

Theorem3Record verify_theorem3(const Graph& g) {
  if (g.order() > kMaxVerifyVertices) {
    throw SizeGuardError("verify_theorem3: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                         std::to_string(kMaxVerifyVertices));
  }
  const auto n = g.order();
  Theorem3Record rec;
  if (n == 0) {
    rec.aut_order = rec.kernel_order = rec.reduced_aut_order = 1;
    rec.first_stage_order = rec.first_stage_expected = 1;
    for (const char* name : {"kernel-subgroup", "kernel-normal", "quotient-embeds", "first-stage-exact"}) {
      rec.checks.push_back({name, true, "empty graph"});
    }
    return rec;
  }

  const auto reduction = complete_twin_reduction(g);
  const auto& maximal = reduction.partition;
  const auto auts = all_automorphisms(g);
  rec.aut_order = auts.size();

  auto in_kernel = [&](Packed p) { return preserves_parts(p, maximal); };
  std::vector<Packed> kernel;
  for (Packed a : auts) {
    if (in_kernel(a)) kernel.push_back(a);
  }
  rec.kernel_order = kernel.size();

  // N is a subgroup: the closure of generators drawn from N stays in N and
  // has exactly |N| elements.
  const auto n_group = generate(kernel, n, in_kernel);
  {
    CheckResult c{"kernel-subgroup", !n_group.escape && n_group.elements.size() == kernel.size(), ""};
    c.detail = "|N| = " + std::to_string(kernel.size()) + ", closure of " +
               std::to_string(n_group.generators.size()) + " generators has " +
               std::to_string(n_group.elements.size()) + " elements";
    if (n_group.escape) c.detail += "; closure leaves N at " + cycles_of(*n_group.escape, n);
    rec.checks.push_back(std::move(c));
  }

  // Normality: conjugating generators of N by generators of G stays in N.
  {
    const auto g_group = generate(auts, n, [](Packed) { return true; });
    CheckResult c{"kernel-normal", true, ""};
    for (Packed x : g_group.generators) {
      const Packed xi = invert(x, n);
      for (Packed s : n_group.generators) {
        const Packed conj = compose(compose(xi, s, n), x, n);
        if (!in_kernel(conj)) {
          c.passed = false;
          c.detail = "conjugate of " + cycles_of(s, n) + " by " + cycles_of(x, n) + " is " + cycles_of(conj, n) +
                     ", outside N";
          break;
        }
      }
      if (!c.passed) break;
    }
    if (c.passed) {
      c.detail = std::to_string(g_group.generators.size()) + " generators of Aut checked against " +
                 std::to_string(n_group.generators.size()) + " generators of N";
    }
    rec.checks.push_back(std::move(c));
  }

  // G/N embeds in Aut of the twin-free quotient.
  {
    rec.reduced_aut_order = automorphism_count(reduction.reduced);
    const bool divides_g = rec.kernel_order != 0 && rec.aut_order % rec.kernel_order == 0;
    const auto factor = divides_g ? rec.aut_order / rec.kernel_order : 0;
    CheckResult c{"quotient-embeds", divides_g && rec.reduced_aut_order % factor == 0, ""};
    c.detail = "|G/N| = " + std::to_string(rec.aut_order) + "/" + std::to_string(rec.kernel_order) +
               ", |Aut(reduced)| = " + std::to_string(rec.reduced_aut_order);
    rec.checks.push_back(std::move(c));
  }

  // First stage: automorphisms fixing each open twin class setwise are
  // exactly the products of permutations within the classes.
  {
    const auto open = twin_classes(g, TwinKind::Open);
    std::uint64_t expected = 1;
    for (auto size : open.part_sizes()) {
      for (std::size_t i = 2; i <= size; ++i) expected *= i;
    }
    std::uint64_t found = 0;
    for (Packed a : auts) {
      if (preserves_parts(a, open)) ++found;
    }
    rec.first_stage_order = found;
    rec.first_stage_expected = expected;
    CheckResult c{"first-stage-exact", found == expected, ""};
    c.detail = "found " + std::to_string(found) + ", product of open class factorials " + std::to_string(expected);
    rec.checks.push_back(std::move(c));
  }
  return rec;
}

}  // namespace twinreduce
