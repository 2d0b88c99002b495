#pragma once

#include <strongcomp/error.hpp>
#include <strongcomp/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strongcomp {

/// Emission order of the components relative to the arcs between them.
enum class OrderKind { reverse_topological, topological };

/// Order of the vertices inside each emitted component.
enum class WithinOrder { postorder, preorder, search_order };

constexpr std::string_view to_string(OrderKind k) noexcept
{
  return k == OrderKind::reverse_topological ? "reverse-topological" : "topological";
}

constexpr std::string_view to_string(WithinOrder k) noexcept
{
  switch (k) {
  case WithinOrder::postorder: return "postorder";
  case WithinOrder::preorder: return "preorder";
  case WithinOrder::search_order: return "search-order";
  }
  return "?";
}

/// Strong components as a flat list: component i occupies
/// vertices[offsets[i] .. offsets[i+1]). `leader[v]` is the leader of the
/// component containing v.
struct SccResult {
  std::vector<Vertex> leader{ no_vertex };
  std::vector<Vertex> vertices;
  std::vector<std::size_t> offsets{ 0 };
  OrderKind order_kind = OrderKind::reverse_topological;
  WithinOrder within_order = WithinOrder::postorder;

  [[nodiscard]] std::size_t vertex_count() const noexcept { return leader.size() - 1; }
  [[nodiscard]] std::size_t component_count() const noexcept { return offsets.size() - 1; }

  [[nodiscard]] std::span<Vertex const> component(std::size_t i) const noexcept
  {
    return std::span<Vertex const>(vertices).subspan(offsets[i], offsets[i + 1] - offsets[i]);
  }

  [[nodiscard]] Vertex component_leader(std::size_t i) const noexcept { return leader[vertices[offsets[i]]]; }

  /// Component index of every vertex (index 0 unused).
  [[nodiscard]] std::vector<std::size_t> component_index() const
  {
    std::vector<std::size_t> idx(leader.size(), 0);
    for (std::size_t i = 0; i < component_count(); ++i)
      for (auto v : component(i)) idx[v] = i;
    return idx;
  }

  friend bool operator==(SccResult const&, SccResult const&) = default;
};

/// Appends components one at a time.
class SccBuilder {
public:
  SccBuilder(std::size_t n, OrderKind order, WithinOrder within)
  {
    result_.leader.assign(n + 1, no_vertex);
    result_.vertices.reserve(n);
    result_.order_kind = order;
    result_.within_order = within;
  }

  void add(Vertex v, Vertex leader)
  {
    result_.vertices.push_back(v);
    result_.leader[v] = leader;
  }

  void close_component() { result_.offsets.push_back(result_.vertices.size()); }

  [[nodiscard]] SccResult take() && { return std::move(result_); }

private:
  SccResult result_;
};

/// Throws Error{invalid_partition} unless `scc` partitions 1..n with
/// consistent leaders, each leader lying in its own component.
inline void validate_partition(std::size_t n, SccResult const& scc)
{
  auto fail = [](std::string const& what) { throw Error(ErrorCode::invalid_partition, what); };
  if (scc.leader.size() != n + 1) fail("leader map size does not match n=" + std::to_string(n));
  if (scc.vertices.size() != n) fail("components do not list exactly n vertices");
  if (scc.offsets.empty() || scc.offsets.front() != 0 || scc.offsets.back() != n) fail("bad component offsets");
  for (std::size_t i = 0; i + 1 < scc.offsets.size(); ++i)
    if (scc.offsets[i] >= scc.offsets[i + 1]) fail("empty or unordered component at index " + std::to_string(i));
  std::vector<std::size_t> comp(n + 1, SIZE_MAX);
  for (std::size_t i = 0; i < scc.component_count(); ++i)
    for (auto v : scc.component(i)) {
      if (v < 1 || v > n) fail("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (comp[v] != SIZE_MAX) fail("vertex " + std::to_string(v) + " listed twice");
      comp[v] = i;
    }
  for (std::size_t i = 0; i < scc.component_count(); ++i) {
    auto const l = scc.component_leader(i);
    if (l < 1 || l > n || comp[l] != i) fail("leader of component " + std::to_string(i) + " is not a member");
    for (auto v : scc.component(i))
      if (scc.leader[v] != l) fail("vertex " + std::to_string(v) + " has an inconsistent leader");
  }
}

/// Per-vertex label independent of leader choice and emission order: the
/// smallest vertex of the component.
inline std::vector<Vertex> canonical_labels(SccResult const& scc)
{
  std::vector<Vertex> label(scc.leader.size(), no_vertex);
  for (std::size_t i = 0; i < scc.component_count(); ++i) {
    auto const c = scc.component(i);
    auto const lo = *std::min_element(c.begin(), c.end());
    for (auto v : c) label[v] = lo;
  }
  return label;
}

inline bool same_partition(SccResult const& a, SccResult const& b)
{
  return canonical_labels(a) == canonical_labels(b);
}

/// Leaders of the components in emission order.
inline std::vector<Vertex> emission_leaders(SccResult const& scc)
{
  std::vector<Vertex> out;
  out.reserve(scc.component_count());
  for (std::size_t i = 0; i < scc.component_count(); ++i) out.push_back(scc.component_leader(i));
  return out;
}

/// Same components emitted in the opposite order; within-component order is
/// kept.
inline SccResult reversed_emission(SccResult const& scc)
{
  SccResult out;
  out.leader = scc.leader;
  out.order_kind =
    scc.order_kind == OrderKind::reverse_topological ? OrderKind::topological : OrderKind::reverse_topological;
  out.within_order = scc.within_order;
  out.vertices.reserve(scc.vertices.size());
  for (auto i = scc.component_count(); i-- > 0;) {
    auto const c = scc.component(i);
    out.vertices.insert(out.vertices.end(), c.begin(), c.end());
    out.offsets.push_back(out.vertices.size());
  }
  return out;
}

} // namespace strongcomp
