#pragma once

// Generic depth-first exploration over a Graph with three interchangeable
// engines: the recursive one, Implementation V (vertex stack plus a
// per-vertex current-arc slot) and Implementation A (arc stack threaded
// through one link word per vertex).
//
// A visitor supplies the event handlers as member functions. The three
// required ones are
//
//   void start(std::size_t n);      // mark every vertex unvisited
//   bool unvisited(Vertex v);       // true iff v not yet previsited
//   void previsit(Vertex v);        // must mark v visited
//
// and any of the following may be present:
//
//   void search_start(Vertex s);
//   void postvisit(Vertex v);
//   void advance(Vertex v, Arc a, Vertex w);
//   void tree_advance(Vertex v, Arc a, Vertex w);
//   void tree_retreat(Vertex v, Arc a, Vertex w);
//   void nontree_traverse(Vertex v, Arc a, Vertex w);
//   void retreat(Vertex v, Arc a, Vertex w);
//   bool stop_requested();          // polled after previsits and retreats
//   void on_stop(std::span<Vertex const> path);   // current path, leaf first
//   std::span<std::uint32_t> link_slots();        // A engine stack links
//
// Absent handlers compile to nothing. Arcs are taken in out-list order and
// searches start at the unvisited vertices of `starts` in order (ascending
// ids when `starts` is empty).

#include <strongcomp/error.hpp>
#include <strongcomp/graph.hpp>
#include <strongcomp/memory_model.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace strongcomp {

enum class EngineKind { recursive, v_stack, a_stack };

constexpr std::string_view to_string(EngineKind kind) noexcept
{
  switch (kind) {
  case EngineKind::recursive: return "recursive";
  case EngineKind::v_stack: return "v";
  case EngineKind::a_stack: return "a";
  }
  return "?";
}

inline std::optional<EngineKind> parse_engine(std::string_view name) noexcept
{
  if (name == "recursive" || name == "r") return EngineKind::recursive;
  if (name == "v" || name == "v-stack") return EngineKind::v_stack;
  if (name == "a" || name == "a-stack") return EngineKind::a_stack;
  return std::nullopt;
}

inline constexpr EngineKind all_engines[] = { EngineKind::recursive, EngineKind::v_stack, EngineKind::a_stack };

struct ExploreStats {
  std::size_t starts = 0;
  bool stopped = false;
};

namespace detail {

template<class V>
void fire_search_start(V& vis, Vertex s)
{
  if constexpr (requires { vis.search_start(s); }) vis.search_start(s);
}

template<class V>
void fire_postvisit(V& vis, Vertex v)
{
  if constexpr (requires { vis.postvisit(v); }) vis.postvisit(v);
}

template<class V>
void fire_advance(V& vis, Vertex v, Arc a, Vertex w)
{
  if constexpr (requires { vis.advance(v, a, w); }) vis.advance(v, a, w);
}

template<class V>
void fire_tree_advance(V& vis, Vertex v, Arc a, Vertex w)
{
  if constexpr (requires { vis.tree_advance(v, a, w); }) vis.tree_advance(v, a, w);
}

template<class V>
void fire_tree_retreat(V& vis, Vertex v, Arc a, Vertex w)
{
  if constexpr (requires { vis.tree_retreat(v, a, w); }) vis.tree_retreat(v, a, w);
}

template<class V>
void fire_nontree_traverse(V& vis, Vertex v, Arc a, Vertex w)
{
  if constexpr (requires { vis.nontree_traverse(v, a, w); }) vis.nontree_traverse(v, a, w);
}

template<class V>
void fire_retreat(V& vis, Vertex v, Arc a, Vertex w)
{
  if constexpr (requires { vis.retreat(v, a, w); }) vis.retreat(v, a, w);
}

template<class V>
bool poll_stop(V& vis)
{
  if constexpr (requires { { vis.stop_requested() } -> std::convertible_to<bool>; })
    return vis.stop_requested();
  else
    return false;
}

template<class V>
void fire_stop(V& vis, std::span<Vertex const> path)
{
  if constexpr (requires { vis.on_stop(path); }) vis.on_stop(path);
}

inline void check_start_order(std::size_t n, std::span<Vertex const> starts)
{
  if (starts.empty()) return;
  if (starts.size() != n) throw Error(ErrorCode::out_of_range, "start order must list every vertex once");
  std::vector<bool> seen(n + 1, false);
  for (auto s : starts) {
    if (s < 1 || s > n || seen[s]) throw Error(ErrorCode::out_of_range, "start order is not a permutation of 1..n");
    seen[s] = true;
  }
}

// Shared outer loop: runs one search per unvisited start vertex.
template<class V, class Mem, class SearchFn>
ExploreStats run_searches(Graph const& g, V& vis, Mem&, std::span<Vertex const> starts, SearchFn&& search)
{
  auto const n = g.vertex_count();
  ExploreStats stats;
  vis.start(n);
  auto visit_start = [&](Vertex s) {
    if (!vis.unvisited(s)) return false;
    ++stats.starts;
    fire_search_start(vis, s);
    return search(s);
  };
  if (starts.empty()) {
    for (Vertex s = 1; s <= n; ++s)
      if (visit_start(s)) {
        stats.stopped = true;
        break;
      }
  } else {
    for (auto s : starts)
      if (visit_start(s)) {
        stats.stopped = true;
        break;
      }
  }
  return stats;
}

} // namespace detail

/// Recursive engine. Call depth equals the longest tree path, so it is only
/// suitable for shallow graphs.
template<class Visitor, AccessPolicy Mem = Uncounted>
class RecursiveEngine {
public:
  RecursiveEngine(Graph const& g, Visitor& vis, Mem& mem)
    : g_(g), vis_(vis), mem_(mem)
  {}

  ExploreStats run(std::span<Vertex const> starts = {})
  {
    return detail::run_searches(g_, vis_, mem_, starts, [this](Vertex s) {
      path_.clear();
      if (!dfs(s)) return false;
      detail::fire_stop(vis_, std::span<Vertex const>(path_));
      return true;
    });
  }

private:
  // Returns true when the visitor asked to stop; the unwinding frames then
  // append themselves to path_, leaf first.
  bool dfs(Vertex v)
  {
    vis_.previsit(v);
    if (detail::poll_stop(vis_)) {
      path_.push_back(v);
      return true;
    }
    for (Arc a = mem_.read(g_.first(v)); a != no_arc; a = mem_.read(g_.next(a))) {
      Vertex const w = mem_.read(g_.tip(a));
      detail::fire_advance(vis_, v, a, w);
      if (vis_.unvisited(w)) {
        detail::fire_tree_advance(vis_, v, a, w);
        if (dfs(w)) {
          path_.push_back(v);
          return true;
        }
        detail::fire_tree_retreat(vis_, v, a, w);
      } else {
        detail::fire_nontree_traverse(vis_, v, a, w);
      }
      detail::fire_retreat(vis_, v, a, w);
      if (detail::poll_stop(vis_)) {
        path_.push_back(v);
        return true;
      }
    }
    detail::fire_postvisit(vis_, v);
    return false;
  }

  Graph const& g_;
  Visitor& vis_;
  Mem& mem_;
  std::vector<Vertex> path_;
};

/// Implementation V: a stack P of path vertices plus a current-arc word per
/// vertex. With `Basic` every advance pushes and every retreat pops; the
/// default variant keeps a vertex on P from its first tree advance until its
/// own retreat, so each non-leaf vertex is pushed and popped exactly once.
///
/// Register set under counting: v, a, w, s and the stack index. The stack
/// cells, top included, and the arc words are memory.
template<class Visitor, AccessPolicy Mem = Uncounted, bool Basic = false>
class VStackEngine {
public:
  VStackEngine(Graph const& g, Visitor& vis, Mem& mem)
    : g_(g), vis_(vis), mem_(mem), arc_(g.vertex_count() + 1, no_arc), stack_(g.vertex_count() + 1, no_vertex)
  {}

  ExploreStats run(std::span<Vertex const> starts = {})
  {
    return detail::run_searches(g_, vis_, mem_, starts, [this](Vertex s) { return dfs(s); });
  }

  /// Pushes onto P so far.
  [[nodiscard]] std::size_t pushes() const noexcept { return pushes_; }

private:
  // stack_[0] is a permanent no_vertex cell so top() never needs an
  // emptiness test.
  Vertex top() { return mem_.read(stack_[sp_]); }
  void push(Vertex v)
  {
    ++pushes_;
    mem_.write(stack_[++sp_], v);
  }
  Vertex pop()
  {
    if (sp_ == 0) detail::invariant_failure("pop on empty vertex stack");
    if constexpr (Basic) {
      return mem_.read(stack_[sp_--]);
    } else {
      --sp_;
      return no_vertex;
    }
  }

  bool stop(Vertex v)
  {
    if (!detail::poll_stop(vis_)) return false;
    path_.clear();
    std::size_t i = sp_;
    if (i == 0 || mem_.read(stack_[i]) != v) path_.push_back(v);
    for (; i >= 1; --i) path_.push_back(mem_.read(stack_[i]));
    detail::fire_stop(vis_, std::span<Vertex const>(path_));
    return true;
  }

  bool dfs(Vertex s)
  {
    sp_ = 0;
    Vertex v = s;
    Vertex w = no_vertex;
    vis_.previsit(v);
    if (stop(v)) return true;
    Arc a = mem_.read(g_.first(v));
    while (true) {
      if (a != no_arc) {
        w = mem_.read(g_.tip(a));
        detail::fire_advance(vis_, v, a, w);
        if (vis_.unvisited(w)) {
          detail::fire_tree_advance(vis_, v, a, w);
          vis_.previsit(w);
          // FORWARD
          mem_.write(arc_[v], a);
          if constexpr (Basic) {
            push(v);
          } else {
            if (top() != v) push(v);
          }
          v = w;
          a = mem_.read(g_.first(v));
          if (stop(v)) return true;
          continue;
        }
        detail::fire_nontree_traverse(vis_, v, a, w);
      } else {
        detail::fire_postvisit(vis_, v);
        if (v == s) return false;
        // BACKWARD
        w = v;
        if constexpr (Basic) {
          v = pop();
        } else {
          if (top() == v) pop();
          v = top();
        }
        a = mem_.read(arc_[v]);
        detail::fire_tree_retreat(vis_, v, a, w);
      }
      detail::fire_retreat(vis_, v, a, w);
      if (stop(v)) return true;
      a = mem_.read(g_.next(a));
    }
  }

  Graph const& g_;
  Visitor& vis_;
  Mem& mem_;
  std::vector<Arc> arc_;
  std::vector<Vertex> stack_;
  std::size_t sp_ = 0;
  std::size_t pushes_ = 0;
  std::vector<Vertex> path_;
};

/// Implementation A: the stack P holds the tree arcs of the current path,
/// linked through the tips: for u on the path with a grandparent, link(u) is
/// the tree arc entering u's parent. The arc entering v is popped just
/// before v is postvisited, so link(v) is free from the postvisit on.
///
/// The link words come from the visitor's link_slots() when it has one,
/// otherwise the engine owns them. Register set under counting: v, a, w, s
/// and the stack head P.
template<class Visitor, AccessPolicy Mem = Uncounted>
class AStackEngine {
public:
  AStackEngine(Graph const& g, Visitor& vis, Mem& mem)
    : g_(g), vis_(vis), mem_(mem)
  {
    if constexpr (requires { { vis.link_slots() } -> std::convertible_to<std::span<std::uint32_t>>; }) {
      link_ = vis.link_slots();
    } else {
      own_.assign(g.vertex_count() + 1, 0);
      link_ = own_;
    }
    if (link_.size() < g.vertex_count() + 1) detail::invariant_failure("link slot array too small");
  }

  ExploreStats run(std::span<Vertex const> starts = {})
  {
    return detail::run_searches(g_, vis_, mem_, starts, [this](Vertex s) { return dfs(s); });
  }

private:
  bool stop(Vertex v, Vertex s, Arc p)
  {
    if (!detail::poll_stop(vis_)) return false;
    path_.clear();
    path_.push_back(v);
    Vertex cur = v;
    while (p != no_arc) {
      Arc const below = mem_.read(link_[cur]);
      cur = below == no_arc ? s : mem_.read(g_.tip(below));
      path_.push_back(cur);
      p = below;
    }
    detail::fire_stop(vis_, std::span<Vertex const>(path_));
    return true;
  }

  bool dfs(Vertex s)
  {
    Arc p = no_arc;
    Vertex v = s;
    Vertex w = no_vertex;
    vis_.previsit(v);
    if (stop(v, s, p)) return true;
    Arc a = mem_.read(g_.first(v));
    while (true) {
      if (a != no_arc) {
        w = mem_.read(g_.tip(a));
        detail::fire_advance(vis_, v, a, w);
        if (vis_.unvisited(w)) {
          detail::fire_tree_advance(vis_, v, a, w);
          vis_.previsit(w);
          // FORWARD
          mem_.write(link_[w], p);
          p = a;
          v = w;
          a = mem_.read(g_.first(v));
          if (stop(v, s, p)) return true;
          continue;
        }
        detail::fire_nontree_traverse(vis_, v, a, w);
      } else {
        Arc entering = no_arc;
        if (v != s) {
          if (p == no_arc) detail::invariant_failure("pop on empty arc stack");
          entering = p;
          p = mem_.read(link_[v]);
        }
        detail::fire_postvisit(vis_, v);
        if (v == s) return false;
        // BACKWARD
        w = v;
        v = p == no_arc ? s : mem_.read(g_.tip(p));
        a = entering;
        detail::fire_tree_retreat(vis_, v, a, w);
      }
      detail::fire_retreat(vis_, v, a, w);
      if (stop(v, s, p)) return true;
      a = mem_.read(g_.next(a));
    }
  }

  Graph const& g_;
  Visitor& vis_;
  Mem& mem_;
  std::span<std::uint32_t> link_;
  std::vector<std::uint32_t> own_;
  std::vector<Vertex> path_;
};

/// Runs a depth-first exploration of `g` with the chosen engine.
template<class Visitor, AccessPolicy Mem>
ExploreStats explore_with(Graph const& g, EngineKind kind, Visitor& vis, std::span<Vertex const> starts, Mem& mem)
{
  detail::check_start_order(g.vertex_count(), starts);
  switch (kind) {
  case EngineKind::recursive: return RecursiveEngine<Visitor, Mem>(g, vis, mem).run(starts);
  case EngineKind::v_stack: return VStackEngine<Visitor, Mem>(g, vis, mem).run(starts);
  case EngineKind::a_stack: return AStackEngine<Visitor, Mem>(g, vis, mem).run(starts);
  }
  detail::invariant_failure("unknown engine kind");
}

template<class Visitor>
ExploreStats explore_with(Graph const& g, EngineKind kind, Visitor& vis, std::span<Vertex const> starts = {})
{
  Uncounted mem;
  return explore_with(g, kind, vis, starts, mem);
}

/// Basic (push on every advance) Implementation V, kept for equivalence
/// testing against the default variant.
template<class Visitor>
ExploreStats explore_v_stack_basic(Graph const& g, Visitor& vis, std::span<Vertex const> starts = {})
{
  detail::check_start_order(g.vertex_count(), starts);
  Uncounted mem;
  return VStackEngine<Visitor, Uncounted, true>(g, vis, mem).run(starts);
}

/// Minimal visitor: one visited flag per vertex.
template<AccessPolicy Mem = Uncounted>
class MarkVisitor {
public:
  explicit MarkVisitor(Mem& mem) : mem_(mem) {}

  void start(std::size_t n)
  {
    mark_.resize(n + 1);
    for (std::size_t v = 1; v <= n; ++v) mem_.write(mark_[v], 0);
  }
  bool unvisited(Vertex v) { return mem_.read(mark_[v]) == 0; }
  void previsit(Vertex v) { mem_.write(mark_[v], 1); }

private:
  Mem& mem_;
  std::vector<std::uint32_t> mark_;
};

} // namespace strongcomp
