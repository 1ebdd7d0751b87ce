#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cliquevc/error.hpp"
#include "cliquevc/graph.hpp"

// Edge-list text format:
//   # comment lines are ignored anywhere
//   n m
//   u v        (m lines, 0 <= u,v < n, u != v)
// Duplicate edges are dropped and counted.

namespace cliquevc {

struct ParsedGraph {
  Graph graph;
  std::size_t duplicate_edges = 0;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_count(std::string_view tok, std::size_t& out) {
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace detail

inline ParsedGraph parse_edge_list(std::string_view text, std::size_t max_vertices = kDefaultMaxVertices) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0, edges_read = 0, duplicates = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto toks = detail::split_ws(line);
    if (toks.empty() || toks.front().front() == '#') {
      if (eol == text.size()) break;
      continue;
    }
    if (toks.size() != 2) throw ParseError(line_no, have_header ? "malformed edge" : "malformed header");

    std::size_t a = 0, b = 0;
    if (!detail::parse_count(toks[0], a) || !detail::parse_count(toks[1], b))
      throw ParseError(line_no, have_header ? "malformed edge" : "malformed header");

    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      if (n > max_vertices) throw ResourceLimit("vertex count " + std::to_string(n) + " exceeds limit");
      edges.reserve(m);
    } else {
      if (edges_read == m) throw ParseError(line_no, "more edges than declared");
      if (a >= n || b >= n) throw ParseError(line_no, "vertex out of range");
      if (a == b) throw ParseError(line_no, "self-loop");
      edges.emplace_back(a, b);
      ++edges_read;
    }
    if (eol == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (edges_read != m)
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges_read));

  GraphBuilder builder(n, max_vertices);
  for (auto [u, v] : edges)
    if (!builder.add_edge(u, v)) ++duplicates;
  return {std::move(builder).build(), duplicates};
}

// Header "n m", then edges as "u v" with u < v in lexicographic order.
inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace cliquevc
