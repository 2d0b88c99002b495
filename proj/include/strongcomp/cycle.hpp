#pragma once

// Cycle-finding strong components: a stack L of the leaders of the
// strongly connected sets on the current path and a stack F of vertices
// found to be followers. A non-tree arc into a live set merges every set
// above it on L; a postvisit of the top of L declares its set a component.
//
// pre doubles as the visited mark (0 unvisited, infinity = 2n+1 once the
// component is declared). L, F and the leader assignment share one link
// word per vertex: a vertex sits on at most one of the stacks at a time and
// gets its leader only after leaving both. The search engine keeps its own
// link words, since vertices join L while they are still on the engine's
// path.
//
// Register set under counting: v, a, w, s, time, the previsit count, the
// top of L with its pre, the top of F, and |L|. pre(w) read by the
// unvisited test is reused by the non-tree merge loop.

#include <strongcomp/dfs.hpp>
#include <strongcomp/error.hpp>
#include <strongcomp/graph.hpp>
#include <strongcomp/memory_model.hpp>
#include <strongcomp/scc_result.hpp>

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace strongcomp {

struct CycleOptions {
  EngineKind engine = EngineKind::a_stack;
  bool stop_early = false;
};

/// Stop-early condition: every vertex previsited and only the start vertex
/// left on L.
constexpr bool cycle_stop_early_trigger(std::size_t previsited, std::size_t n, std::size_t leaders_on_stack) noexcept
{
  return previsited == n && leaders_on_stack == 1;
}

template<AccessPolicy Mem = Uncounted>
class CycleVisitor {
public:
  static constexpr Vertex guard = 0;

  CycleVisitor(Graph const& g, CycleOptions const& opts, Mem& mem)
    : opts_(opts)
    , mem_(mem)
    , n_(static_cast<std::uint32_t>(g.vertex_count()))
    , infinity_(2 * n_ + 1)
    , pre_(n_ + 1, 0)
    , link_(n_ + 1, 0)
    , builder_(n_, OrderKind::reverse_topological, WithinOrder::preorder)
  {}

  void start(std::size_t n)
  {
    time_ = 0;
    previsited_ = 0;
    l_top_ = no_vertex;
    l_top_pre_ = 0;
    l_size_ = 0;
    pre_[guard] = 0;
    f_top_ = guard;
    for (std::size_t v = 1; v <= n; ++v) mem_.write(pre_[v], 0);
  }

  bool unvisited(Vertex v)
  {
    w_pre_ = mem_.read(pre_[v]);
    return w_pre_ == 0;
  }

  void search_start(Vertex s) { s_ = s; }

  void previsit(Vertex v)
  {
    ++time_;
    mem_.write(pre_[v], time_);
    ++previsited_;
    // L.push(v)
    mem_.write(link_[v], l_top_);
    l_top_ = v;
    l_top_pre_ = time_;
    ++l_size_;
    check_stop();
  }

  void nontree_traverse(Vertex, Arc, Vertex)
  {
    while (w_pre_ < l_top_pre_) {
      auto const x = pop_leader();
      mem_.write(link_[x], f_top_);
      f_top_ = x;
    }
  }

  void retreat(Vertex, Arc, Vertex) { check_stop(); }

  void postvisit(Vertex v)
  {
    if (v != l_top_) return;
    scratch_.clear();
    scratch_.emplace_back(l_top_pre_, v);
    for (;;) {
      auto const fp = mem_.read(pre_[f_top_]);
      if (!(l_top_pre_ < fp)) break;
      auto const x = f_top_;
      if (x == guard) detail::invariant_failure("followers stack popped its guard");
      scratch_.emplace_back(fp, x);
      f_top_ = mem_.read(link_[x]);
      mem_.write(link_[x], v);
      mem_.write(pre_[x], infinity_);
    }
    pop_leader();
    mem_.write(link_[v], v);
    mem_.write(pre_[v], infinity_);
    emit(v);
  }

  bool stop_requested() const { return stop_; }

  /// The last component is F plus the start vertex; every other vertex on
  /// the path has already moved to F.
  void on_stop(std::span<Vertex const> path)
  {
    auto const s = path.back();
    if (l_top_ != s) detail::invariant_failure("stop with a leader other than the start vertex");
    scratch_.clear();
    scratch_.emplace_back(l_top_pre_, s);
    while (f_top_ != guard) {
      auto const x = f_top_;
      scratch_.emplace_back(mem_.read(pre_[x]), x);
      f_top_ = mem_.read(link_[x]);
      mem_.write(link_[x], s);
      mem_.write(pre_[x], infinity_);
    }
    pop_leader();
    mem_.write(link_[s], s);
    mem_.write(pre_[s], infinity_);
    emit(s);
    stopped_ = true;
  }

  SccResult finish() &&
  {
    if (f_top_ != guard) detail::invariant_failure("followers stack not empty at termination");
    if (l_size_ != 0) detail::invariant_failure("leaders stack not empty at termination");
    return std::move(builder_).take();
  }

  [[nodiscard]] bool stopped_early() const noexcept { return stopped_; }

  // Read-only views for invariant checking.

  [[nodiscard]] std::uint32_t pre(Vertex v) const noexcept { return pre_[v]; }
  [[nodiscard]] std::uint32_t infinity() const noexcept { return infinity_; }
  [[nodiscard]] bool completed(Vertex v) const noexcept { return pre_[v] == infinity_; }

  /// L from bottom to top.
  [[nodiscard]] std::vector<Vertex> leaders() const
  {
    std::vector<Vertex> out;
    for (Vertex x = l_top_; x != no_vertex; x = link_[x]) out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// F from bottom to top, guard excluded.
  [[nodiscard]] std::vector<Vertex> followers() const
  {
    std::vector<Vertex> out;
    for (Vertex x = f_top_; x != guard; x = link_[x]) out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// Leader assigned to a completed vertex.
  [[nodiscard]] Vertex assigned_leader(Vertex v) const noexcept { return completed(v) ? link_[v] : no_vertex; }

private:
  Vertex pop_leader()
  {
    if (l_size_ == 0) detail::invariant_failure("pop of empty leaders stack");
    auto const x = l_top_;
    l_top_ = mem_.read(link_[x]);
    --l_size_;
    l_top_pre_ = l_top_ == no_vertex ? 0 : mem_.read(pre_[l_top_]);
    return x;
  }

  void check_stop()
  {
    if (opts_.stop_early && cycle_stop_early_trigger(previsited_, n_, l_size_)) stop_ = true;
  }

  void emit(Vertex leader)
  {
    // pre values were read as the vertices left F; the leader has the least
    std::sort(scratch_.begin() + 1, scratch_.end());
    for (auto const& [p, x] : scratch_) builder_.add(x, leader);
    builder_.close_component();
  }

  CycleOptions opts_;
  Mem& mem_;
  std::uint32_t n_;
  std::uint32_t infinity_;
  std::vector<std::uint32_t> pre_;
  std::vector<std::uint32_t> link_;
  std::vector<std::pair<std::uint32_t, Vertex>> scratch_;
  SccBuilder builder_;
  std::uint32_t time_ = 0;
  std::size_t previsited_ = 0;
  Vertex s_ = no_vertex;
  Vertex l_top_ = no_vertex;
  std::uint32_t l_top_pre_ = 0;
  std::size_t l_size_ = 0;
  Vertex f_top_ = guard;
  std::uint32_t w_pre_ = 0;
  bool stop_ = false;
  bool stopped_ = false;
};

template<AccessPolicy Mem>
SccResult scc_cycle(Graph const& g, CycleOptions const& opts, std::span<Vertex const> starts, Mem& mem)
{
  CycleVisitor<Mem> vis(g, opts, mem);
  explore_with(g, opts.engine, vis, starts, mem);
  return std::move(vis).finish();
}

/// Strong components in reverse topological order, each listed in preorder
/// with its leader first.
inline SccResult scc_cycle(Graph const& g, CycleOptions const& opts = {}, std::span<Vertex const> starts = {})
{
  Uncounted mem;
  return scc_cycle(g, opts, starts, mem);
}

} // namespace strongcomp
