#pragma once

#include <strongcomp/dfs.hpp>
#include <strongcomp/error.hpp>
#include <strongcomp/graph.hpp>
#include <strongcomp/memory_model.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace strongcomp {

/// Quick search (stack-driven, neither depth- nor breadth-first): pop a
/// vertex, visit it, push every out-neighbour that is unvisited and not on
/// the stack.
///
/// One word per vertex serves as both mark and stack link: 0 means unseen;
/// any other value means seen, and while the vertex is on the stack it is
/// the vertex below it (`bottom()` for the lowest entry). A popped vertex
/// keeps its stale nonzero link, which is all the push rule needs.
template<AccessPolicy Mem = Uncounted>
class QuickSearch {
public:
  QuickSearch(Graph const& g, Mem& mem) : g_(g), mem_(mem), mark_(g.vertex_count() + 1, 0) {}

  /// Marks every vertex unseen. Counted as n writes.
  void reset()
  {
    for (std::size_t v = 1; v <= g_.vertex_count(); ++v) mem_.write(mark_[v], 0);
  }

  [[nodiscard]] bool seen(Vertex v) { return mem_.read(mark_[v]) != 0; }

  /// Searches from `s`, which must be unseen, calling `visit(v)` at each pop.
  template<class Visit>
  void search_from(Vertex s, Visit&& visit)
  {
    Vertex top = bottom();
    push(s, top);
    while (top != bottom()) {
      Vertex const v = top;
      top = mem_.read(mark_[v]);
      if (top == 0) detail::invariant_failure("quick search popped an unlinked vertex");
      visit(v);
      for (Arc a = mem_.read(g_.first(v)); a != no_arc; a = mem_.read(g_.next(a))) {
        Vertex const w = mem_.read(g_.tip(a));
        if (mem_.read(mark_[w]) == 0) push(w, top);
      }
    }
  }

  [[nodiscard]] Vertex bottom() const noexcept { return static_cast<Vertex>(g_.vertex_count() + 1); }

private:
  void push(Vertex w, Vertex& top)
  {
    mem_.write(mark_[w], top);
    top = w;
  }

  Graph const& g_;
  Mem& mem_;
  std::vector<Vertex> mark_;
};

struct QuickSearchStats {
  std::size_t starts = 0;
};

/// Full quick-search exploration; starts are taken in `start_order`
/// (ascending when empty). Returns the visit order.
template<class OnVisit, AccessPolicy Mem>
std::vector<Vertex>
quick_search(Graph const& g, std::span<Vertex const> start_order, OnVisit&& on_visit, Mem& mem, QuickSearchStats* stats = nullptr)
{
  detail::check_start_order(g.vertex_count(), start_order);
  std::vector<Vertex> order;
  order.reserve(g.vertex_count());
  QuickSearch<Mem> qs(g, mem);
  qs.reset();
  std::size_t starts = 0;
  auto from = [&](Vertex s) {
    if (qs.seen(s)) return;
    ++starts;
    qs.search_from(s, [&](Vertex v) {
      order.push_back(v);
      on_visit(v);
    });
  };
  if (start_order.empty())
    for (Vertex s = 1; s <= g.vertex_count(); ++s) from(s);
  else
    for (auto s : start_order) from(s);
  if (stats) stats->starts = starts;
  return order;
}

template<class OnVisit>
std::vector<Vertex> quick_search(Graph const& g, std::span<Vertex const> start_order, OnVisit&& on_visit)
{
  Uncounted mem;
  return quick_search(g, start_order, on_visit, mem);
}

inline std::vector<Vertex> quick_search(Graph const& g, std::span<Vertex const> start_order = {})
{
  return quick_search(g, start_order, [](Vertex) {});
}

} // namespace strongcomp
