#include "twinreduce/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

#include "twinreduce/errors.hpp"

namespace twinreduce {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint32_t sextet(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) {
    throw ParseError("graph6: character code " + std::to_string(u) + " outside 63..126");
  }
  return u - 63;
}

void append_big_endian(std::string& out, std::uint64_t value, int sextets) {
  for (int i = sextets - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 0x3F)));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  auto take = [&](int count) {
    if (pos + count > text.size()) throw ParseError("graph6: truncated length prefix");
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | sextet(text[pos++]);
    return v;
  };

  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = take(1);
  } else {
    ++pos;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      n = take(6);
      if (n <= 258047) throw ParseError("graph6: non-minimal 8-byte length prefix");
    } else {
      n = take(3);
      if (n <= 62) throw ParseError("graph6: non-minimal 4-byte length prefix");
    }
  }
  if (n > kMaxParsedVertices) {
    throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds the supported maximum");
  }

  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t needed = (bit_count + 5) / 6;
  const auto body = text.substr(pos);
  if (body.size() < needed) throw ParseError("graph6: truncated adjacency data");
  if (body.size() > needed) throw ParseError("graph6: trailing characters after adjacency data");

  GraphBuilder b(n);
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::uint32_t s = sextet(body[k / 6]);
      if ((s >> (5 - k % 6)) & 1U) b.add_edge(i, j);
    }
  }
  // Padding bits must be zero and every character must be in range.
  for (std::size_t c = 0; c < body.size(); ++c) {
    const std::uint32_t s = sextet(body[c]);
    if (c + 1 == body.size() && bit_count % 6 != 0) {
      const auto pad = 6 - bit_count % 6;
      if ((s & ((1U << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
    }
  }
  return std::move(b).build();
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    append_big_endian(out, n, 1);
  } else if (n <= 258047) {
    out.push_back('~');
    append_big_endian(out, n, 3);
  } else {
    out.append("~~");
    append_big_endian(out, n, 6);
  }
  std::uint32_t acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t line_no = 0;

  // Next non-blank, non-comment line, trimmed.
  bool next(std::string_view& line) {
    while (!text.empty()) {
      const auto nl = text.find('\n');
      auto raw = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      ++line_no;
      raw = trim(raw);
      if (raw.empty() || raw.front() == '#') continue;
      line = raw;
      return true;
    }
    return false;
  }
};

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_natural(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": unparsable token '" +
                     std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw ParseError("edge list: missing 'n <count>' header");
  const auto head = tokens(line);
  if (head.size() != 2 || head[0] != "n") {
    throw ParseError("edge list line " + std::to_string(reader.line_no) +
                     ": expected 'n <count>'");
  }
  const auto n = parse_natural(head[1], reader.line_no);
  if (n > kMaxParsedVertices) throw ParseError("edge list: vertex count exceeds the supported maximum");

  GraphBuilder b(n);
  while (reader.next(line)) {
    const auto tok = tokens(line);
    if (tok.size() != 2) {
      throw ParseError("edge list line " + std::to_string(reader.line_no) + ": expected 'u v'");
    }
    const auto u = parse_natural(tok[0], reader.line_no);
    const auto v = parse_natural(tok[1], reader.line_no);
    if (u >= n || v >= n) {
      throw ParseError("edge list line " + std::to_string(reader.line_no) +
                       ": vertex index out of range");
    }
    if (u == v) throw ParseError("edge list line " + std::to_string(reader.line_no) + ": self-loop");
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return std::move(b).build();
}

std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph parse_graph_auto(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw ParseError("empty graph input");
  const auto tok = tokens(line);
  if (!tok.empty() && tok[0] == "n") return parse_edge_list(text);
  if (reader.next(line)) throw ParseError("graph6: trailing lines after the graph");
  return parse_graph6(tok.size() == 1 ? tok[0] : trim(text));
}

}  // namespace twinreduce
