#pragma once

// Bidirectional strong components: a forward exploration lists the vertices
// in reverse postorder, then a backward search on the reversed graph takes
// start vertices in that order. Each backward start is the leader of its
// component and reaches exactly that component, so components come out in
// topological order.
//
// One word per vertex is the forward visited mark and then the component
// assignment: 0 unvisited, n+1 visited but unassigned, else the leader. The
// backward pass never resets it. The backward quick search threads its
// stack through the forward engine's link words.

#include <strongcomp/dfs.hpp>
#include <strongcomp/error.hpp>
#include <strongcomp/graph.hpp>
#include <strongcomp/memory_model.hpp>
#include <strongcomp/scc_result.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace strongcomp {

enum class BackwardSearch { quick, depth_first };

struct BidiOptions {
  EngineKind engine = EngineKind::a_stack;
  /// Forward pass ends after the last previsit, backward pass once every
  /// vertex is assigned.
  bool stop_early = false;
  BackwardSearch backward = BackwardSearch::quick;
};

namespace detail {

template<AccessPolicy Mem>
class ForwardPostorderVisitor {
public:
  ForwardPostorderVisitor(std::size_t n, bool stop_early, Mem& mem)
    : mem_(mem)
    , n_(static_cast<std::uint32_t>(n))
    , stop_early_(stop_early)
    , mark_(n + 1, 0)
    , link_(n + 1, 0)
    , rev_post_(n, no_vertex)
    , pos_(n)
  {}

  void start(std::size_t n)
  {
    for (std::size_t v = 1; v <= n; ++v) mem_.write(mark_[v], 0);
  }
  bool unvisited(Vertex v) { return mem_.read(mark_[v]) == 0; }
  void previsit(Vertex v)
  {
    mem_.write(mark_[v], unassigned());
    if (++previsited_ == n_ && stop_early_) stop_ = true;
  }
  void postvisit(Vertex v) { mem_.write(rev_post_[--pos_], v); }
  bool stop_requested() const { return stop_; }
  void on_stop(std::span<Vertex const> path)
  {
    // no arcs remain to be explored: the path unwinds leaf first
    for (auto v : path) postvisit(v);
  }
  std::span<std::uint32_t> link_slots() { return link_; }

  [[nodiscard]] std::uint32_t unassigned() const noexcept { return n_ + 1; }

  Mem& mem_;
  std::uint32_t n_;
  bool stop_early_;
  std::vector<std::uint32_t> mark_;
  std::vector<std::uint32_t> link_;
  std::vector<Vertex> rev_post_;
  std::size_t pos_;
  std::size_t previsited_ = 0;
  bool stop_ = false;
};

// Backward depth-first search reusing the forward marks.
class BackwardDfsVisitor {
public:
  BackwardDfsVisitor(std::vector<std::uint32_t>& mark, std::uint32_t unassigned, SccBuilder& out)
    : mark_(mark), unassigned_(unassigned), out_(out)
  {}

  void start(std::size_t) {}
  bool unvisited(Vertex v) const { return mark_[v] == unassigned_; }
  void search_start(Vertex s)
  {
    if (leader_ != no_vertex) out_.close_component();
    leader_ = s;
  }
  void previsit(Vertex v)
  {
    mark_[v] = leader_;
    out_.add(v, leader_);
  }
  void finish()
  {
    if (leader_ != no_vertex) out_.close_component();
  }

private:
  std::vector<std::uint32_t>& mark_;
  std::uint32_t unassigned_;
  SccBuilder& out_;
  Vertex leader_ = no_vertex;
};

} // namespace detail

/// Vertices in decreasing postvisit time of a forward exploration.
template<AccessPolicy Mem>
std::vector<Vertex>
forward_reverse_postorder(Graph const& g, EngineKind engine, std::span<Vertex const> start_order, bool stop_early, Mem& mem)
{
  detail::ForwardPostorderVisitor<Mem> vis(g.vertex_count(), stop_early, mem);
  explore_with(g, engine, vis, start_order, mem);
  return std::move(vis.rev_post_);
}

inline std::vector<Vertex> forward_reverse_postorder(Graph const& g,
                                                     EngineKind engine = EngineKind::a_stack,
                                                     std::span<Vertex const> start_order = {},
                                                     bool stop_early = false)
{
  Uncounted mem;
  return forward_reverse_postorder(g, engine, start_order, stop_early, mem);
}

/// Runs both passes. `g_rev` must be reverse_graph(g) when given.
template<AccessPolicy Mem>
SccResult scc_bidirectional(Graph const& g,
                            Graph const& g_rev,
                            BidiOptions const& opts,
                            std::span<Vertex const> starts,
                            Mem& mem,
                            ExploreStats* forward_stats = nullptr)
{
  auto const n = g.vertex_count();
  if (g_rev.vertex_count() != n || g_rev.arc_count() != g.arc_count())
    throw Error(ErrorCode::out_of_range, "reversed graph does not match the graph");

  detail::ForwardPostorderVisitor<Mem> fwd(n, opts.stop_early, mem);
  auto const fstats = explore_with(g, opts.engine, fwd, starts, mem);
  if (forward_stats) *forward_stats = fstats;

  auto& mark = fwd.mark_;
  auto& link = fwd.link_;
  auto const& rev_post = fwd.rev_post_;
  auto const unassigned = fwd.unassigned();
  SccBuilder out(n, OrderKind::topological, WithinOrder::search_order);

  if (opts.backward == BackwardSearch::depth_first) {
    detail::BackwardDfsVisitor bwd(mark, unassigned, out);
    explore_with(g_rev, opts.engine, bwd, rev_post);
    bwd.finish();
    return std::move(out).take();
  }

  std::size_t assigned = 0;
  Vertex const bottom = static_cast<Vertex>(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (opts.stop_early && assigned == n) break;
    Vertex const s = mem.read(rev_post[i]);
    if (mem.read(mark[s]) != unassigned) continue;
    Vertex top = bottom;
    mem.write(mark[s], s);
    mem.write(link[s], top);
    top = s;
    while (top != bottom) {
      Vertex const v = top;
      top = mem.read(link[v]);
      out.add(v, s);
      ++assigned;
      for (Arc a = mem.read(g_rev.first(v)); a != no_arc; a = mem.read(g_rev.next(a))) {
        Vertex const w = mem.read(g_rev.tip(a));
        if (mem.read(mark[w]) == unassigned) {
          mem.write(mark[w], s);
          mem.write(link[w], top);
          top = w;
        }
      }
    }
    out.close_component();
  }
  if (assigned != n) detail::invariant_failure("backward pass left vertices unassigned");
  return std::move(out).take();
}

inline SccResult scc_bidirectional(Graph const& g,
                                   Graph const* g_rev = nullptr,
                                   BidiOptions const& opts = {},
                                   std::span<Vertex const> starts = {})
{
  Uncounted mem;
  if (g_rev) return scc_bidirectional(g, *g_rev, opts, starts, mem);
  return scc_bidirectional(g, reverse_graph(g), opts, starts, mem);
}

} // namespace strongcomp
