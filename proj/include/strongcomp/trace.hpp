#pragma once

#include <strongcomp/dfs.hpp>
#include <strongcomp/graph.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strongcomp {

enum class EventKind : std::uint8_t {
  search_start,
  previsit,
  postvisit,
  tree_advance,
  nontree_traverse,
  tree_retreat,
  retreat,
};

constexpr std::string_view to_string(EventKind kind) noexcept
{
  switch (kind) {
  case EventKind::search_start: return "START";
  case EventKind::previsit: return "PRE";
  case EventKind::postvisit: return "POST";
  case EventKind::tree_advance: return "TREE_ADV";
  case EventKind::nontree_traverse: return "NONTREE";
  case EventKind::tree_retreat: return "TREE_RET";
  case EventKind::retreat: return "RET";
  }
  return "?";
}

/// One exploration event. Vertex events use `v` only; arc events carry the
/// arc and both ends.
struct TraceEvent {
  EventKind kind;
  Vertex v = no_vertex;
  Arc a = no_arc;
  Vertex w = no_vertex;

  friend bool operator==(TraceEvent const&, TraceEvent const&) = default;
};

using ExplorationTrace = std::vector<TraceEvent>;

/// One line per event, e.g. "TREE_ADV 1 1 2".
inline std::string format_trace(ExplorationTrace const& trace)
{
  std::string out;
  for (auto const& e : trace) {
    out += to_string(e.kind);
    out += ' ';
    out += std::to_string(e.v);
    if (e.a != no_arc || e.w != no_vertex) {
      out += ' ';
      out += std::to_string(e.a);
      out += ' ';
      out += std::to_string(e.w);
    }
    out += '\n';
  }
  return out;
}

/// Forwards every event to `Inner` and appends it to a trace.
template<class Inner>
class RecordingVisitor {
public:
  RecordingVisitor(Inner& inner, ExplorationTrace& trace) : inner_(inner), trace_(trace) {}

  void start(std::size_t n) { inner_.start(n); }
  bool unvisited(Vertex v) { return inner_.unvisited(v); }
  void search_start(Vertex s)
  {
    trace_.push_back({ EventKind::search_start, s });
    detail::fire_search_start(inner_, s);
  }
  void previsit(Vertex v)
  {
    trace_.push_back({ EventKind::previsit, v });
    inner_.previsit(v);
  }
  void postvisit(Vertex v)
  {
    trace_.push_back({ EventKind::postvisit, v });
    detail::fire_postvisit(inner_, v);
  }
  void advance(Vertex v, Arc a, Vertex w) { detail::fire_advance(inner_, v, a, w); }
  void tree_advance(Vertex v, Arc a, Vertex w)
  {
    trace_.push_back({ EventKind::tree_advance, v, a, w });
    detail::fire_tree_advance(inner_, v, a, w);
  }
  void tree_retreat(Vertex v, Arc a, Vertex w)
  {
    trace_.push_back({ EventKind::tree_retreat, v, a, w });
    detail::fire_tree_retreat(inner_, v, a, w);
  }
  void nontree_traverse(Vertex v, Arc a, Vertex w)
  {
    trace_.push_back({ EventKind::nontree_traverse, v, a, w });
    detail::fire_nontree_traverse(inner_, v, a, w);
  }
  void retreat(Vertex v, Arc a, Vertex w)
  {
    trace_.push_back({ EventKind::retreat, v, a, w });
    detail::fire_retreat(inner_, v, a, w);
  }
  bool stop_requested() { return detail::poll_stop(inner_); }
  void on_stop(std::span<Vertex const> path) { detail::fire_stop(inner_, path); }
  std::span<std::uint32_t> link_slots()
    requires requires(Inner& i) { i.link_slots(); }
  {
    return inner_.link_slots();
  }

private:
  Inner& inner_;
  ExplorationTrace& trace_;
};

/// Runtime-configurable handlers. Visited marking is done by the adapter,
/// so every handler is optional.
struct ExplorationCallbacks {
  std::function<void(Vertex)> search_start;
  std::function<void(Vertex)> previsit;
  std::function<void(Vertex)> postvisit;
  std::function<void(Vertex, Arc, Vertex)> advance;
  std::function<void(Vertex, Arc, Vertex)> tree_advance;
  std::function<void(Vertex, Arc, Vertex)> tree_retreat;
  std::function<void(Vertex, Arc, Vertex)> nontree_traverse;
  std::function<void(Vertex, Arc, Vertex)> retreat;
};

namespace detail {

class CallbackVisitor {
public:
  explicit CallbackVisitor(ExplorationCallbacks const& cb) : cb_(cb) {}

  void start(std::size_t n) { visited_.assign(n + 1, false); }
  bool unvisited(Vertex v) const { return !visited_[v]; }
  void search_start(Vertex s) { call(cb_.search_start, s); }
  void previsit(Vertex v)
  {
    visited_[v] = true;
    call(cb_.previsit, v);
  }
  void postvisit(Vertex v) { call(cb_.postvisit, v); }
  void advance(Vertex v, Arc a, Vertex w) { call(cb_.advance, v, a, w); }
  void tree_advance(Vertex v, Arc a, Vertex w) { call(cb_.tree_advance, v, a, w); }
  void tree_retreat(Vertex v, Arc a, Vertex w) { call(cb_.tree_retreat, v, a, w); }
  void nontree_traverse(Vertex v, Arc a, Vertex w) { call(cb_.nontree_traverse, v, a, w); }
  void retreat(Vertex v, Arc a, Vertex w) { call(cb_.retreat, v, a, w); }

private:
  template<class F, class... Args>
  static void call(F const& f, Args... args)
  {
    if (f) f(args...);
  }

  ExplorationCallbacks const& cb_;
  std::vector<bool> visited_;
};

} // namespace detail

/// Explores `g` with the given engine, invoking `callbacks` and returning
/// the full event trace.
inline ExplorationTrace explore(Graph const& g,
                                EngineKind engine,
                                ExplorationCallbacks const& callbacks = {},
                                std::span<Vertex const> starts = {})
{
  ExplorationTrace trace;
  detail::CallbackVisitor inner(callbacks);
  RecordingVisitor rec(inner, trace);
  explore_with(g, engine, rec, starts);
  return trace;
}

struct TimeStamps {
  std::vector<std::uint32_t> pre;
  std::vector<std::uint32_t> post;

  friend bool operator==(TimeStamps const&, TimeStamps const&) = default;
};

/// Pre/post times plus the tree arcs of one exploration.
struct DepthFirstForest {
  TimeStamps stamps;
  std::vector<Arc> tree_arcs;   // in tree-advance order
  std::vector<Arc> parent_arc;  // per vertex, no_arc for roots
};

/// Model stubs: consecutive integer times 1..2n over all previsits and
/// postvisits.
class TimestampVisitor {
public:
  void start(std::size_t n)
  {
    time_ = 0;
    forest_.stamps.pre.assign(n + 1, 0);
    forest_.stamps.post.assign(n + 1, 0);
    forest_.parent_arc.assign(n + 1, no_arc);
    forest_.tree_arcs.clear();
  }
  bool unvisited(Vertex v) const { return forest_.stamps.pre[v] == 0; }
  void previsit(Vertex v) { forest_.stamps.pre[v] = ++time_; }
  void postvisit(Vertex v) { forest_.stamps.post[v] = ++time_; }
  void tree_advance(Vertex, Arc a, Vertex w)
  {
    forest_.tree_arcs.push_back(a);
    forest_.parent_arc[w] = a;
  }

  DepthFirstForest& forest() { return forest_; }

private:
  std::uint32_t time_ = 0;
  DepthFirstForest forest_;
};

inline DepthFirstForest depth_first_forest(Graph const& g, EngineKind engine, std::span<Vertex const> starts = {})
{
  TimestampVisitor vis;
  explore_with(g, engine, vis, starts);
  return std::move(vis.forest());
}

inline TimeStamps compute_pre_post(Graph const& g, EngineKind engine, std::span<Vertex const> starts = {})
{
  return depth_first_forest(g, engine, starts).stamps;
}

/// Trace of the plain exploration (timestamping handlers) of `g`.
inline ExplorationTrace trace_exploration(Graph const& g, EngineKind engine, std::span<Vertex const> starts = {})
{
  ExplorationTrace trace;
  TimestampVisitor inner;
  RecordingVisitor rec(inner, trace);
  explore_with(g, engine, rec, starts);
  return trace;
}

enum class ArcClass : std::uint8_t { tree, back, forward, cross, loop };

constexpr std::string_view to_string(ArcClass c) noexcept
{
  switch (c) {
  case ArcClass::tree: return "tree";
  case ArcClass::back: return "back";
  case ArcClass::forward: return "forward";
  case ArcClass::cross: return "cross";
  case ArcClass::loop: return "loop";
  }
  return "?";
}

/// True iff `w` is a descendant of `v` (v itself included), decided by
/// interval nesting of the timestamps.
inline bool is_descendant(TimeStamps const& t, Vertex w, Vertex v) noexcept
{
  return t.pre[v] <= t.pre[w] && t.pre[w] < t.post[v];
}

/// Labels every arc; index 0 of the result is unused.
inline std::vector<ArcClass> classify_arcs(Graph const& g, TimeStamps const& stamps, std::span<Arc const> tree_arcs)
{
  std::vector<ArcClass> cls(g.arc_count() + 1, ArcClass::cross);
  std::vector<bool> is_tree(g.arc_count() + 1, false);
  for (auto a : tree_arcs) is_tree[a] = true;
  for (Arc a = 1; a <= g.arc_count(); ++a) {
    auto const [x, y] = g.ends(a);
    if (x == y)
      cls[a] = ArcClass::loop;
    else if (is_tree[a])
      cls[a] = ArcClass::tree;
    else if (is_descendant(stamps, x, y))
      cls[a] = ArcClass::back;
    else if (is_descendant(stamps, y, x))
      cls[a] = ArcClass::forward;
    else
      cls[a] = ArcClass::cross;
  }
  return cls;
}

} // namespace strongcomp
