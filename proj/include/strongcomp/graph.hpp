#pragma once

#include <strongcomp/error.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace strongcomp {

/// Vertices are numbered 1..n; 0 is the "no vertex" sentinel.
using Vertex = std::uint32_t;
/// Arcs are numbered 1..m in input order; 0 is the null link.
using Arc = std::uint32_t;

inline constexpr Vertex no_vertex = 0;
inline constexpr Arc no_arc = 0;

struct ArcEnds {
  Vertex tail;
  Vertex head;

  friend bool operator==(ArcEnds const&, ArcEnds const&) = default;
};

/// Unchecked graph data in the linked representation: per-vertex first arc,
/// per-arc tip and next link. Index 0 of every array is unused.
struct RawGraph {
  std::size_t n = 0;
  std::vector<Arc> first{ no_arc };
  std::vector<Vertex> tip{ no_vertex };
  std::vector<Arc> next{ no_arc };
};

/// Read-only directed graph stored as endogenous singly linked out-lists.
///
/// `first(v)` is the head of the out-list of `v`, `next(a)` the arc after `a`
/// on its list (no_arc at the end) and `tip(a)` the vertex `a` enters. The
/// out-list of each vertex enumerates its arcs in input order. Loops and
/// parallel arcs are kept as given.
class Graph {
public:
  Graph() = default;

  [[nodiscard]] std::size_t vertex_count() const noexcept { return first_.size() - 1; }
  [[nodiscard]] std::size_t arc_count() const noexcept { return tip_.size() - 1; }

  [[nodiscard]] Arc const& first(Vertex v) const noexcept { return first_[v]; }
  [[nodiscard]] Vertex const& tip(Arc a) const noexcept { return tip_[a]; }
  [[nodiscard]] Arc const& next(Arc a) const noexcept { return next_[a]; }
  [[nodiscard]] Vertex tail(Arc a) const noexcept { return tail_[a]; }

  [[nodiscard]] ArcEnds ends(Arc a) const noexcept { return { tail_[a], tip_[a] }; }

  /// Arcs in id order as (tail, head) pairs.
  [[nodiscard]] std::vector<ArcEnds> arc_list() const
  {
    std::vector<ArcEnds> arcs;
    arcs.reserve(arc_count());
    for (Arc a = 1; a <= arc_count(); ++a) arcs.push_back(ends(a));
    return arcs;
  }

  /// Out-list of `v` materialized in list order.
  [[nodiscard]] std::vector<Arc> out_arcs(Vertex v) const
  {
    std::vector<Arc> arcs;
    for (Arc a = first_[v]; a != no_arc; a = next_[a]) arcs.push_back(a);
    return arcs;
  }

  [[nodiscard]] RawGraph raw() const { return RawGraph{ vertex_count(), first_, tip_, next_ }; }

  friend bool operator==(Graph const&, Graph const&) = default;

  friend Graph build_graph(std::size_t n, std::span<ArcEnds const> arcs);

private:
  std::vector<Arc> first_{ no_arc };
  std::vector<Vertex> tip_{ no_vertex };
  std::vector<Arc> next_{ no_arc };
  std::vector<Vertex> tail_{ no_vertex };
};

/// Builds a graph on vertices 1..n whose arc k (1-based) is arcs[k-1].
/// Throws Error{out_of_range} if an endpoint lies outside 1..n.
inline Graph build_graph(std::size_t n, std::span<ArcEnds const> arcs)
{
  if (n >= std::size_t{ UINT32_MAX } || arcs.size() >= std::size_t{ UINT32_MAX })
    throw Error(ErrorCode::out_of_range, "graph too large for 32-bit ids");
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    auto const [t, h] = arcs[k];
    if (t < 1 || t > n || h < 1 || h > n)
      throw Error(ErrorCode::out_of_range,
                  "arc " + std::to_string(k + 1) + " (" + std::to_string(t) + "," + std::to_string(h) +
                    ") has an endpoint outside 1.." + std::to_string(n));
  }

  Graph g;
  auto const m = arcs.size();
  g.first_.assign(n + 1, no_arc);
  g.tip_.resize(m + 1);
  g.next_.resize(m + 1);
  g.tail_.resize(m + 1);
  g.tip_[0] = no_vertex;
  g.next_[0] = no_arc;
  g.tail_[0] = no_vertex;
  // prepend in reverse so every out-list ends up in input order
  for (auto k = m; k >= 1; --k) {
    auto const a = static_cast<Arc>(k);
    auto const [t, h] = arcs[k - 1];
    g.tail_[a] = t;
    g.tip_[a] = h;
    g.next_[a] = g.first_[t];
    g.first_[t] = a;
  }
  return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<ArcEnds> arcs)
{
  return build_graph(n, std::span<ArcEnds const>(arcs.begin(), arcs.size()));
}

/// Arc k of the result is arc k of `g` with its ends swapped; each new
/// out-list is in ascending original arc id.
inline Graph reverse_graph(Graph const& g)
{
  std::vector<ArcEnds> arcs;
  arcs.reserve(g.arc_count());
  for (Arc a = 1; a <= g.arc_count(); ++a) arcs.push_back({ g.tip(a), g.tail(a) });
  return build_graph(g.vertex_count(), arcs);
}

enum class DiagnosticKind {
  size_mismatch,
  out_of_range,
  chain_cycle,
  shared_arc,
  orphan_arc,
};

struct GraphDiagnostic {
  DiagnosticKind kind;
  Arc arc = no_arc;
  Vertex vertex = no_vertex;
  std::string message;
};

/// Checks the linked-representation invariants on candidate data. An empty
/// result means the data describes a valid graph.
inline std::vector<GraphDiagnostic> validate_graph(RawGraph const& raw)
{
  std::vector<GraphDiagnostic> out;
  auto const n = raw.n;
  if (raw.first.size() != n + 1 || raw.tip.size() != raw.next.size() || raw.tip.empty()) {
    out.push_back({ DiagnosticKind::size_mismatch, no_arc, no_vertex,
                    "array sizes do not match n=" + std::to_string(n) });
    return out;
  }
  auto const m = raw.tip.size() - 1;

  bool links_ok = true;
  for (std::size_t a = 1; a <= m; ++a) {
    if (raw.tip[a] < 1 || raw.tip[a] > n)
      out.push_back({ DiagnosticKind::out_of_range, static_cast<Arc>(a), no_vertex,
                      "arc " + std::to_string(a) + " has tip " + std::to_string(raw.tip[a]) + " outside 1.." +
                        std::to_string(n) });
    if (raw.next[a] > m) {
      out.push_back({ DiagnosticKind::out_of_range, static_cast<Arc>(a), no_vertex,
                      "arc " + std::to_string(a) + " has next link " + std::to_string(raw.next[a]) +
                        " outside 0.." + std::to_string(m) });
      links_ok = false;
    }
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (raw.first[v] > m) {
      out.push_back({ DiagnosticKind::out_of_range, no_arc, static_cast<Vertex>(v),
                      "vertex " + std::to_string(v) + " has first arc " + std::to_string(raw.first[v]) +
                        " outside 0.." + std::to_string(m) });
      links_ok = false;
    }
  }
  if (!links_ok) return out;

  // owner[a] = vertex whose chain reached a first
  std::vector<Vertex> owner(m + 1, no_vertex);
  for (std::size_t v = 1; v <= n; ++v) {
    for (Arc a = raw.first[v]; a != no_arc; a = raw.next[a]) {
      if (owner[a] == v) {
        out.push_back({ DiagnosticKind::chain_cycle, a, static_cast<Vertex>(v),
                        "out-list of vertex " + std::to_string(v) + " revisits arc " + std::to_string(a) });
        break;
      }
      if (owner[a] != no_vertex) {
        out.push_back({ DiagnosticKind::shared_arc, a, static_cast<Vertex>(v),
                        "arc " + std::to_string(a) + " is on the out-lists of vertices " +
                          std::to_string(owner[a]) + " and " + std::to_string(v) });
        break;
      }
      owner[a] = static_cast<Vertex>(v);
    }
  }
  for (std::size_t a = 1; a <= m; ++a)
    if (owner[a] == no_vertex)
      out.push_back({ DiagnosticKind::orphan_arc, static_cast<Arc>(a), no_vertex,
                      "arc " + std::to_string(a) + " is on no out-list" });
  return out;
}

} // namespace strongcomp
