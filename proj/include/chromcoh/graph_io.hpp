#pragma once

// Text formats for graphs.
//
// Edge list (line oriented, '#' starts a comment line, blank lines skipped):
//
//   v <vertex_count>
//   e <a> <b>          one line per edge, file order = edge order
//
// graph6: the standard encoding for simple undirected graphs. It carries no
// edge order, so decoded edges are sorted lexicographically by
// (smaller endpoint, larger endpoint).

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chromcoh/error.hpp"
#include "chromcoh/graph.hpp"

namespace chromcoh {

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

inline std::int64_t parse_int(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

inline Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::int64_t vertex_count = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = detail::split_ws(raw);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "v") {
        throw ParseError(line_no, "expected header 'v <vertex_count>'");
      }
      vertex_count = detail::parse_int(tokens[1], line_no);
      if (vertex_count < 0) throw ParseError(line_no, "negative vertex count");
      if (vertex_count > std::int64_t{UINT32_MAX}) throw ParseError(line_no, "vertex count too large");
      have_header = true;
      continue;
    }
    if (tokens[0] == "v") throw ParseError(line_no, "duplicate 'v' header");
    if (tokens[0] != "e" || tokens.size() != 3) {
      throw ParseError(line_no, "expected 'e <a> <b>'");
    }
    const std::int64_t a = detail::parse_int(tokens[1], line_no);
    const std::int64_t b = detail::parse_int(tokens[2], line_no);
    if (a < 0 || b < 0) throw ParseError(line_no, "negative vertex index");
    if (a >= vertex_count || b >= vertex_count) {
      throw ParseError(line_no, "vertex index out of range 0.." + std::to_string(vertex_count - 1));
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header) throw ParseError(line_no, "missing 'v <vertex_count>' header");
  return Graph(static_cast<std::size_t>(vertex_count), std::move(edges));
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "v " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.a << ' ' << e.b << '\n';
}

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  std::size_t pos = 0;
  auto next = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw ParseError(0, "graph6: truncated input");
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw ParseError(0, "graph6: invalid byte " + std::to_string(c) + " at offset " + std::to_string(pos));
    }
    ++pos;
    return c - 63U;
  };

  std::uint64_t n = 0;
  if (text.empty()) throw ParseError(0, "graph6: empty input");
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = next();
  } else {
    ++pos;
    int groups = 3;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      ++pos;
      groups = 6;
    }
    for (int k = 0; k < groups; ++k) n = (n << 6) | next();
  }
  if (n > UINT32_MAX) throw ParseError(0, "graph6: vertex count too large");

  std::vector<Edge> edges;
  std::uint64_t chunk = 0;
  int bits_left = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      if (bits_left == 0) {
        chunk = next();
        bits_left = 6;
      }
      --bits_left;
      if ((chunk >> bits_left) & 1U) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  if (pos != text.size()) throw ParseError(0, "graph6: trailing bytes after adjacency data");
  std::sort(edges.begin(), edges.end());
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace chromcoh
