#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vizing/biadjacency.hpp"
#include "vizing/error.hpp"
#include "vizing/graph.hpp"

namespace vizing {

namespace detail {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline bool is_graph6_byte(char c) { return c >= 63 && c <= 126; }

inline std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Decodes one graph6 line. A trailing newline and the optional ">>graph6<<" header are accepted.
inline Graph parse_graph6(std::string_view text, std::size_t max_order = std::size_t{1} << 16) {
  text = detail::trim_line_end(text);
  std::size_t pos = 0;
  if (text.starts_with(detail::kGraph6Header)) pos = detail::kGraph6Header.size();
  if (pos >= text.size()) throw ParseError("empty graph6 input", pos);

  auto byte_at = [&](std::size_t i) -> std::uint64_t {
    if (i >= text.size()) throw ParseError("truncated graph6 header", i);
    if (!detail::is_graph6_byte(text[i])) throw ParseError("invalid graph6 byte", i);
    return static_cast<std::uint64_t>(text[i] - 63);
  };

  std::uint64_t n = 0;
  if (text[pos] != '~') {
    n = byte_at(pos++);
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | byte_at(pos++);
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos++);
  }
  if (n == 0) throw ParseError("graph6 order 0 is not a valid graph", pos);
  if (n > max_order) throw CapacityError("graph6 order " + std::to_string(n) + " exceeds limit");

  const std::size_t order = static_cast<std::size_t>(n);
  const std::size_t bits = order * (order - 1) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (text.size() - pos < payload) throw ParseError("truncated graph6 payload", text.size());
  if (text.size() - pos > payload) throw ParseError("trailing bytes after graph6 payload", pos + payload);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < order; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const std::uint64_t chunk = byte_at(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
    }
  for (; bit < payload * 6; ++bit)
    if ((byte_at(pos + bit / 6) >> (5 - bit % 6)) & 1U)
      throw ParseError("nonzero graph6 padding bits", pos + bit / 6);
  return Graph(order, edges);
}

inline std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.append("~~");
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

namespace detail {

struct TextLine {
  std::string_view content;  // comment stripped, whitespace trimmed
  std::size_t offset;        // byte offset of content within the whole text
};

inline std::vector<TextLine> content_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    line.remove_prefix(lead);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (!line.empty()) out.push_back({line, start + lead});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> split_numbers(const TextLine& line) {
  std::vector<std::pair<std::size_t, std::size_t>> out;  // (value, offset)
  std::string_view s = line.content;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    const std::size_t consumed = static_cast<std::size_t>(ptr - (s.data() + i));
    if (ec != std::errc{} || consumed == 0 ||
        (i + consumed < s.size() && !std::isspace(static_cast<unsigned char>(s[i + consumed]))))
      throw ParseError("expected a non-negative integer", line.offset + i);
    out.emplace_back(value, line.offset + i);
    i += consumed;
  }
  return out;
}

}  // namespace detail

/// Edge-list text: one "u v" pair per line, 0-indexed, '#' starts a comment.
/// An optional first line holding a single integer fixes the vertex count
/// (needed for isolated vertices); otherwise the order is max index + 1.
inline Graph parse_edge_list(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty edge list", 0);
  std::vector<Edge> edges;
  std::size_t declared = 0;
  bool has_declared = false;
  std::size_t highest = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    auto nums = detail::split_numbers(lines[li]);
    if (li == 0 && nums.size() == 1) {
      declared = nums[0].first;
      has_declared = true;
      if (declared == 0) throw ParseError("vertex count must be positive", nums[0].second);
      continue;
    }
    if (nums.size() != 2) throw ParseError("expected exactly two vertex indices", lines[li].offset);
    auto [u, uo] = nums[0];
    auto [v, vo] = nums[1];
    if (u == v) throw ParseError("self-loop", uo);
    if (has_declared && u >= declared) throw ParseError("vertex index beyond declared count", uo);
    if (has_declared && v >= declared) throw ParseError("vertex index beyond declared count", vo);
    if (u > (std::size_t{1} << 20) || v > (std::size_t{1} << 20))
      throw CapacityError("edge list vertex index too large");
    highest = std::max({highest, u, v});
    edges.emplace_back(u, v);
  }
  const std::size_t n = has_declared ? declared : highest + 1;
  return Graph(n, edges);
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Biadjacency text: rows of '0'/'1' characters; blank lines and '#' comments ignored.
inline BinaryMatrix parse_binary_matrix(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty matrix", 0);
  std::vector<std::string> rows;
  for (const auto& line : lines) {
    if (line.content.size() != lines.front().content.size())
      throw ParseError("row length differs from first row", line.offset);
    for (std::size_t j = 0; j < line.content.size(); ++j)
      if (line.content[j] != '0' && line.content[j] != '1')
        throw ParseError("matrix entries must be 0 or 1", line.offset + j);
    if (line.content.size() > BinaryMatrix::kMaxColumns)
      throw CapacityError("matrix wider than 64 columns");
    rows.emplace_back(line.content);
  }
  return BinaryMatrix::from_strings(rows);
}

inline std::string emit_binary_matrix(const BinaryMatrix& m) {
  std::string out;
  for (const auto& row : m.to_strings()) out += row + "\n";
  return out;
}

enum class GraphFormat { Graph6, EdgeList, Biadjacency };

/// Sniffs the format of a graph file.
///   - a single token of graph6 bytes (or the ">>graph6<<" header) is graph6;
///   - a square block of 0/1 rows is a biadjacency matrix;
///   - anything else is parsed as an edge list.
inline GraphFormat detect_format(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty input", 0);
  const auto first = lines.front().content;
  if (first.starts_with(detail::kGraph6Header)) return GraphFormat::Graph6;
  if (lines.size() == 1 &&
      std::all_of(first.begin(), first.end(), [](char c) { return detail::is_graph6_byte(c); }))
    return GraphFormat::Graph6;
  const bool binary_rows = std::all_of(lines.begin(), lines.end(), [&](const detail::TextLine& l) {
    return l.content.size() == lines.size() &&
           l.content.find_first_not_of("01") == std::string_view::npos;
  });
  if (binary_rows) return GraphFormat::Biadjacency;
  return GraphFormat::EdgeList;
}

/// Parses any supported graph text. Biadjacency inputs map rows to vertices 0..n-1 and columns to n..2n-1.
inline Graph parse_graph_text(std::string_view text) {
  switch (detect_format(text)) {
    case GraphFormat::Graph6: {
      auto lines = detail::content_lines(text);
      return parse_graph6(lines.front().content);
    }
    case GraphFormat::Biadjacency:
      return to_graph(parse_binary_matrix(text));
    case GraphFormat::EdgeList:
      break;
  }
  return parse_edge_list(text);
}

}  // namespace vizing
