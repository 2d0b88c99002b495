#pragma once

#include <strongcomp/error.hpp>
#include <strongcomp/graph.hpp>

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace strongcomp {

namespace detail {

// Splits `line` into whitespace-separated unsigned decimals; false on any
// other token or on overflow.
inline bool parse_fields(std::string_view line, std::uint64_t* fields, std::size_t want)
{
  std::size_t got = 0;
  std::size_t i = 0;
  while (true) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    if (got == want) return false;
    std::uint64_t value = 0;
    auto const* begin = line.data() + i;
    auto const [ptr, ec] = std::from_chars(begin, line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == begin) return false;
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') return false;
    fields[got++] = value;
  }
  return got == want;
}

inline bool is_blank(std::string_view line)
{
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

} // namespace detail

/// Parses the edge-list format: a header line "n m" followed by exactly m
/// lines "tail head". Lines starting with '#' and blank lines are skipped.
/// Errors carry the 1-based line number of the offending line.
inline Graph parse_graph(std::string_view text)
{
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) {
    while (pos < text.size()) {
      auto const end = text.find('\n', pos);
      auto const stop = end == std::string_view::npos ? text.size() : end;
      line = text.substr(pos, stop - pos);
      pos = stop + 1;
      ++line_no;
      if (!line.empty() && line.front() == '#') continue;
      if (detail::is_blank(line)) continue;
      return true;
    }
    return false;
  };

  std::string_view line;
  if (!next_line(line)) throw Error(ErrorCode::parse_error, "missing header line \"n m\"", line_no + 1);
  std::uint64_t header[2];
  if (!detail::parse_fields(line, header, 2))
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected \"n m\"", line_no);
  auto const n = header[0];
  auto const m = header[1];
  if (n >= UINT32_MAX || m >= UINT32_MAX)
    throw Error(ErrorCode::out_of_range, "line " + std::to_string(line_no) + ": graph too large", line_no);

  std::vector<ArcEnds> arcs;
  arcs.reserve(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    if (!next_line(line))
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(line_no + 1) + ": expected " + std::to_string(m) + " arcs, found " +
                    std::to_string(k),
                  line_no + 1);
    std::uint64_t f[2];
    if (!detail::parse_fields(line, f, 2))
      throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected \"tail head\"", line_no);
    if (f[0] < 1 || f[0] > n || f[1] < 1 || f[1] > n)
      throw Error(ErrorCode::out_of_range,
                  "line " + std::to_string(line_no) + ": endpoint outside 1.." + std::to_string(n), line_no);
    arcs.push_back({ static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]) });
  }
  if (next_line(line))
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": unexpected content after last arc",
                line_no);
  return build_graph(static_cast<std::size_t>(n), arcs);
}

namespace detail {

inline void append_uint(std::string& out, std::uint64_t value)
{
  char buf[24];
  auto const [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  out.append(buf, ptr);
}

} // namespace detail

/// Emits `g` in the edge-list format with arcs in id order.
inline std::string serialize_graph(Graph const& g)
{
  std::string out;
  out.reserve(16 + g.arc_count() * 16);
  detail::append_uint(out, g.vertex_count());
  out += ' ';
  detail::append_uint(out, g.arc_count());
  out += '\n';
  for (Arc a = 1; a <= g.arc_count(); ++a) {
    detail::append_uint(out, g.tail(a));
    out += ' ';
    detail::append_uint(out, g.tip(a));
    out += '\n';
  }
  return out;
}

} // namespace strongcomp
