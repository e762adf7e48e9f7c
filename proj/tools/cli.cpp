#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "twinreduce/aut_structure.hpp"
#include "twinreduce/cograph.hpp"
#include "twinreduce/errors.hpp"
#include "twinreduce/graph_io.hpp"
#include "twinreduce/group.hpp"
#include "twinreduce/summary.hpp"
#include "twinreduce/twins.hpp"

namespace twinreduce::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kSchema = "twinreduce/1";

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string g6;
  std::string format;
  std::string policy = "det";
  std::optional<std::uint64_t> seed;
  bool verify = false;
  std::string kind;
  bool reduce = false;
  bool drop_isolated = false;
  std::optional<std::size_t> expect_order;
  unsigned jobs = 1;
  std::vector<std::string> parts;
  std::string trace;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoFailure("cannot open " + path);
  buf << file.rdbuf();
  if (file.bad()) throw IoFailure("error reading " + path);
  return buf.str();
}

Graph load_graph(const Options& o, std::istream& in) {
  if (!o.g6.empty()) {
    if (!o.in.empty()) throw UsageError("--in and --g6 are mutually exclusive");
    return parse_graph6(o.g6);
  }
  if (o.in.empty()) throw UsageError("no input graph: pass --in PATH, --in - or --g6 STRING");
  return parse_graph_auto(read_source(o.in, in));
}

std::string format_or(const Options& o, const char* fallback, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  std::string msg = "format '" + f + "' not supported here; use one of";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw UsageError(msg);
}

json partition_json(const Partition& p) { return json(p.parts()); }

json profile_json(const DegreeProfile& d) {
  json out = json::object();
  for (auto [deg, count] : d.counts) out[std::to_string(deg)] = count;
  return out;
}

std::string profile_text(const DegreeProfile& d) {
  std::string s;
  for (auto [deg, count] : d.counts) s += (s.empty() ? "" : " ") + std::to_string(deg) + "x" + std::to_string(count);
  return s.empty() ? "-" : s;
}

std::string join_numbers(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

json trace_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"index", s.index}, {"a", s.part_a}, {"b", s.part_b}, {"kind", to_string(s.kind)}});
  }
  return {{"initial_order", t.initial_order}, {"steps", steps}, {"final_partition", partition_json(t.final_partition)}};
}

ReductionTrace trace_from_json(const json& j) {
  const json& t = j.contains("trace") ? j.at("trace") : j;
  ReductionTrace trace;
  trace.initial_order = t.at("initial_order").get<std::size_t>();
  for (const auto& s : t.at("steps")) {
    MergeStep step;
    step.index = s.at("index").get<std::size_t>();
    step.part_a = s.at("a").get<Vertex>();
    step.part_b = s.at("b").get<Vertex>();
    const auto kind = s.at("kind").get<std::string>();
    if (kind == "open") {
      step.kind = TwinKind::Open;
    } else if (kind == "closed") {
      step.kind = TwinKind::Closed;
    } else {
      throw ParseError("trace: unknown merge kind '" + kind + "'");
    }
    trace.steps.push_back(step);
  }
  try {
    trace.final_partition =
        Partition::from_parts(trace.initial_order, t.at("final_partition").get<std::vector<std::vector<Vertex>>>());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("trace: ") + e.what());
  }
  return trace;
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  const auto format = format_or(o, "text", {"text", "json", "graph6", "edgelist"});
  if (o.policy != "det" && o.policy != "rand") throw UsageError("--policy must be det or rand");
  const Graph g = load_graph(o, in);
  const auto policy = o.policy == "rand" ? MergePolicy::randomized(o.seed.value_or(0)) : MergePolicy::deterministic();
  const auto r = complete_twin_reduction(g, policy);

  if (format == "graph6") {
    out << write_graph6(r.reduced) << '\n';
  } else if (format == "edgelist") {
    out << write_edge_list(r.reduced);
  } else if (format == "json") {
    json j{{"schema", kSchema},
           {"command", "reduce"},
           {"policy", o.policy},
           {"input", {{"order", g.order()}, {"edges", g.edge_count()}}},
           {"reduced",
            {{"graph6", write_graph6(r.reduced)}, {"order", r.reduced.order()}, {"edges", r.reduced.edge_count()}}},
           {"partition", partition_json(r.partition)},
           {"trace", trace_json(r.trace)}};
    j["seed"] = o.policy == "rand" ? json(o.seed.value_or(0)) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "input order " << g.order() << " edges " << g.edge_count() << '\n';
    out << "reduced order " << r.reduced.order() << " edges " << r.reduced.edge_count() << '\n';
    out << "reduced graph6 " << write_graph6(r.reduced) << '\n';
    out << "partition\n" << write_partition(r.partition);
    out << "trace\n" << write_trace(r.trace);
  }
  return kOk;
}

// ---------------------------------------------------------------- replay

int cmd_replay(const Options& o, std::istream& in, std::ostream& out) {
  const auto format = format_or(o, "text", {"text", "json"});
  if (o.trace.empty()) throw UsageError("replay needs --trace PATH");
  const std::string text = read_source(o.trace, in);
  const auto first = text.find_first_not_of(" \t\r\n");
  ReductionTrace trace;
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
      trace = trace_from_json(j);
    } catch (const json::exception& e) {
      throw ParseError(std::string("trace json: ") + e.what());
    }
  } else {
    trace = parse_trace(text);
  }
  std::optional<Graph> g;
  if (!o.in.empty() || !o.g6.empty()) {
    g = load_graph(o, in);
    if (g->order() != trace.initial_order) throw GroundSetMismatch("graph order differs from the trace");
  }

  std::string replayed, error;
  try {
    replayed = write_partition(replay_trace(trace, g ? &*g : nullptr));
  } catch (const InvalidArgument& e) {
    error = e.what();
  }
  const bool match = error.empty() && replayed == write_partition(trace.final_partition);
  if (format == "json") {
    json j{{"schema", kSchema}, {"command", "replay"}, {"steps", trace.steps.size()}, {"match", match}};
    if (!error.empty()) j["error"] = error;
    if (error.empty()) j["partition"] = replay_trace(trace, g ? &*g : nullptr).parts();
    out << j.dump(2) << '\n';
  } else if (!error.empty()) {
    out << "invalid trace: " << error << '\n';
  } else {
    out << replayed << (match ? "match\n" : "mismatch\n");
  }
  return match ? kOk : kNegative;
}

// ---------------------------------------------------------------- cograph / cotree

int cmd_cograph(const Options& o, std::istream& in, std::ostream& out, bool tree_only) {
  const auto format = format_or(o, "text", {"text", "json"});
  const Graph g = load_graph(o, in);
  if (g.order() == 0) throw UsageError("empty graph has no cotree");
  const auto result = build_cotree(g);
  const auto* tree = std::get_if<Cotree>(&result);
  std::string witness;
  if (!tree) {
    for (Vertex v : std::get<NotCograph>(result).witness) witness += (witness.empty() ? "" : " ") + std::to_string(v);
  }
  if (format == "json") {
    json j{{"schema", kSchema}, {"command", tree_only ? "cotree" : "cograph"}, {"cograph", tree != nullptr}};
    if (tree) {
      j["cotree"] = write_cotree(*tree);
    } else {
      j["witness"] = std::get<NotCograph>(result).witness;
    }
    out << j.dump(2) << '\n';
  } else if (tree) {
    if (!tree_only) out << "cograph\n";
    out << write_cotree(*tree) << '\n';
  } else {
    out << "not a cograph\ninduced P4 " << witness << '\n';
  }
  return tree ? kOk : kNegative;
}

// ---------------------------------------------------------------- siblings

int cmd_siblings(const Options& o, std::istream& in, std::ostream& out) {
  const auto format = format_or(o, "text", {"text", "json"});
  if (o.parts.empty() || o.parts.size() > 2) throw UsageError("siblings takes one or two --part files");
  const Graph g = load_graph(o, in);
  std::vector<Partition> ps;
  for (const auto& path : o.parts) ps.push_back(parse_partition(read_source(path, in), g.order()));

  json j{{"schema", kSchema}, {"command", "siblings"}};
  std::ostringstream text;
  auto report = [&](const std::string& label, const Partition& p) {
    const auto v = check_sibling(g, p);
    json entry{{"sibling", !v.has_value()}};
    if (v) {
      entry["violation"] = to_string(v->kind);
      entry["witness"] = v->witness;
    }
    j[label] = entry;
    text << label << (v ? " not sibling: " + describe(*v) : " sibling") << '\n';
    return !v.has_value();
  };

  bool ok;
  if (ps.size() == 1) {
    ok = report("partition", ps[0]);
  } else {
    report("first", ps[0]);
    report("second", ps[1]);
    const auto joined = join(ps[0], ps[1]);
    j["join_partition"] = partition_json(joined);
    text << "join\n" << write_partition(joined);
    ok = report("join", joined);
  }
  if (format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return ok ? kOk : kNegative;
}

// ---------------------------------------------------------------- series

int cmd_series(const Options& o, std::istream& in, std::ostream& out) {
  const auto format = format_or(o, "text", {"text", "json"});
  const Graph g = load_graph(o, in);
  if (o.verify && g.order() > kMaxVerifyVertices) {
    throw SizeGuardError("--verify accepts at most " + std::to_string(kMaxVerifyVertices) + " vertices, got " +
                         std::to_string(g.order()));
  }
  const auto report = normal_series_report(g);
  std::optional<Theorem3Record> rec;
  if (o.verify) rec = verify_theorem3(g);

  if (format == "json") {
    json stages = json::array();
    for (const auto& s : report.stages) {
      stages.push_back({{"kind", to_string(s.kind)},
                        {"class_sizes", s.class_sizes},
                        {"merges", s.merges},
                        {"factor_order", s.factor_order.str()}});
    }
    json j{{"schema", kSchema},
           {"command", "series"},
           {"order", g.order()},
           {"stages", stages},
           {"n_order", report.n_order.str()},
           {"reduced", {{"graph6", write_graph6(report.reduced)}, {"order", report.reduced.order()}}},
           {"maximal_partition", partition_json(report.maximal_partition)}};
    if (rec) {
      json checks = json::array();
      for (const auto& c : rec->checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      j["verify"] = {{"aut_order", rec->aut_order},
                     {"kernel_order", rec->kernel_order},
                     {"reduced_aut_order", rec->reduced_aut_order},
                     {"first_stage_order", rec->first_stage_order},
                     {"checks", checks},
                     {"passed", rec->passed()}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "order " << g.order() << " edges " << g.edge_count() << '\n';
    if (report.stages.empty()) out << "no stages\n";
    for (std::size_t i = 0; i < report.stages.size(); ++i) {
      const auto& s = report.stages[i];
      out << "stage " << i + 1 << "  " << (s.kind == StageKind::Open ? "open  " : "closed") << "  merges " << s.merges
          << "  factor " << s.factor_order << "  classes " << join_numbers(s.class_sizes) << '\n';
    }
    out << "n-order bound " << report.n_order << '\n';
    out << "reduced order " << report.reduced.order() << " graph6 " << write_graph6(report.reduced) << '\n';
    out << "maximal partition\n" << write_partition(report.maximal_partition);
    if (rec) {
      out << "verify |Aut| " << rec->aut_order << "  |N| " << rec->kernel_order << "  |Aut(reduced)| "
          << rec->reduced_aut_order << '\n';
      for (const auto& c : rec->checks) {
        out << "  " << (c.passed ? "pass " : "FAIL ") << c.name << ": " << c.detail << '\n';
      }
      out << (rec->passed() ? "verify passed\n" : "verify failed\n");
    }
  }
  return !rec || rec->passed() ? kOk : kNegative;
}

// ---------------------------------------------------------------- groupgraph

json component_json(const ComponentSummary& c) {
  json j{{"order", c.order}, {"edges", c.edges}, {"degrees", profile_json(c.degrees)}};
  j["girth"] = c.girth ? json(*c.girth) : json(nullptr);
  if (c.sides) {
    j["bipartite"] = true;
    j["sides"] = {{{"size", c.sides->first.size}, {"degrees", profile_json(c.sides->first.degrees)}},
                  {{"size", c.sides->second.size}, {"degrees", profile_json(c.sides->second.degrees)}}};
  } else {
    j["bipartite"] = false;
  }
  return j;
}

int cmd_groupgraph(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto format = format_or(o, o.reduce ? "text" : "graph6", {"text", "json", "graph6", "edgelist"});
  if (o.in.empty()) throw UsageError("groupgraph needs --in GENERATORS");
  const auto kind = parse_group_graph_kind(o.kind.empty() ? "difference" : o.kind);
  if (!kind) throw UsageError("--kind must be power, enhanced, commuting or difference");
  const auto gens = parse_generators(read_source(o.in, in));
  const auto group = enumerate_group(gens);
  if (o.expect_order && *o.expect_order != group.order()) {
    err << "error: group has order " << group.order() << ", expected " << *o.expect_order << '\n';
    return kOrderMismatch;
  }
  Graph g = group_graph(group, *kind, o.jobs);

  if (!o.reduce) {
    if (format == "graph6") {
      out << write_graph6(g) << '\n';
    } else if (format == "edgelist") {
      out << write_edge_list(g);
    } else if (format == "json") {
      json j{{"schema", kSchema},   {"command", "groupgraph"}, {"group_order", group.order()}, {"kind", to_string(*kind)},
             {"order", g.order()},  {"edges", g.edge_count()}, {"graph6", write_graph6(g)}};
      out << j.dump(2) << '\n';
    } else {
      out << "group order " << group.order() << '\n';
      out << "graph " << to_string(*kind) << " order " << g.order() << " edges " << g.edge_count() << '\n';
      out << "graph6 " << write_graph6(g) << '\n';
    }
    return kOk;
  }

  const std::size_t full_order = g.order(), full_edges = g.edge_count();
  if (o.drop_isolated) g = drop_isolated(g);
  const auto r = complete_twin_reduction(g);
  const auto s = summarize(r.reduced);

  if (format == "graph6") {
    out << write_graph6(r.reduced) << '\n';
  } else if (format == "edgelist") {
    out << write_edge_list(r.reduced);
  } else if (format == "json") {
    json census = json::object();
    for (auto [size, count] : s.census) census[std::to_string(size)] = count;
    json j{{"schema", kSchema},
           {"command", "groupgraph"},
           {"group_order", group.order()},
           {"kind", to_string(*kind)},
           {"graph", {{"order", full_order}, {"edges", full_edges}}},
           {"isolated_dropped", o.drop_isolated},
           {"reduced", {{"order", s.order}, {"edges", s.edges}, {"components", census}}},
           {"largest_component", component_json(s.largest)}};
    out << j.dump(2) << '\n';
  } else {
    out << "group order " << group.order() << '\n';
    out << "graph " << to_string(*kind) << " order " << full_order << " edges " << full_edges << '\n';
    if (o.drop_isolated) out << "isolated vertices dropped, order " << g.order() << '\n';
    out << "reduced order " << s.order << " edges " << s.edges << '\n';
    out << "components";
    for (auto [size, count] : s.census) out << ' ' << size << 'x' << count;
    out << '\n';
    const auto& c = s.largest;
    out << "largest component order " << c.order << " edges " << c.edges << '\n';
    out << "degrees " << profile_text(c.degrees) << '\n';
    if (c.sides) {
      out << "bipartite sides " << c.sides->first.size << " + " << c.sides->second.size << ", degrees "
          << profile_text(c.sides->first.degrees) << " | " << profile_text(c.sides->second.degrees) << '\n';
    } else {
      out << "not bipartite\n";
    }
    out << "girth " << (c.girth ? std::to_string(*c.girth) : "infinite") << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twin reduction, sibling partitions, cographs and group graphs.", "twinreduce"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* c) { c->add_option("--in", o.in, "input file, or - for stdin"); };
  auto graph_input = [&](CLI::App* c) {
    input(c);
    c->add_option("--g6", o.g6, "inline graph6 string");
  };
  auto format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "graph6, edgelist, json or text");
  };

  auto* reduce = app.add_subcommand("reduce", "complete twin reduction");
  graph_input(reduce);
  format(reduce);
  reduce->add_option("--policy", o.policy, "det or rand");
  reduce->add_option("--seed", o.seed, "seed for --policy rand");

  auto* replay = app.add_subcommand("replay", "replay a reduction trace and compare partitions");
  replay->add_option("--trace", o.trace, "trace file (text or json), or -")->required();
  graph_input(replay);
  format(replay);

  auto* cograph = app.add_subcommand("cograph", "cograph test with cotree or P4 witness");
  graph_input(cograph);
  format(cograph);

  auto* cotree = app.add_subcommand("cotree", "print the cotree");
  graph_input(cotree);
  format(cotree);

  auto* siblings = app.add_subcommand("siblings", "check a sibling partition, or join two");
  graph_input(siblings);
  format(siblings);
  siblings->add_option("--part", o.parts, "partition file (repeat for a join)")->required();

  auto* series = app.add_subcommand("series", "normal series report");
  graph_input(series);
  format(series);
  series->add_flag("--verify", o.verify, "check the automorphism structure exhaustively");

  auto* groupgraph = app.add_subcommand("groupgraph", "graphs of a permutation group");
  input(groupgraph);
  groupgraph->add_option("--gens", o.in, "alias for --in");
  format(groupgraph);
  groupgraph->add_option("--kind", o.kind, "power, enhanced, commuting or difference");
  groupgraph->add_flag("--reduce", o.reduce, "reduce the graph and summarise it");
  groupgraph->add_flag("--drop-isolated", o.drop_isolated, "remove isolated vertices before reducing");
  groupgraph->add_option("--expect-order", o.expect_order, "fail unless the group has this order");
  groupgraph->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  }

  try {
    if (*reduce) return cmd_reduce(o, in, out);
    if (*replay) return cmd_replay(o, in, out);
    if (*cograph) return cmd_cograph(o, in, out, false);
    if (*cotree) return cmd_cograph(o, in, out, true);
    if (*siblings) return cmd_siblings(o, in, out);
    if (*series) return cmd_series(o, in, out);
    if (*groupgraph) return cmd_groupgraph(o, in, out, err);
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const Error& e) {
    // Parse errors, ground-set mismatches and malformed groups.
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  }
  return kParseFailure;
}

}  // namespace twinreduce::cli
