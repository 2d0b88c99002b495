#pragma once

// Uses of a strong components result: the condensation, the low-arc
// in-trees and depth-first out-trees that certify each component, and a
// checker that validates a result against such certificates.

#include <strongcomp/error.hpp>
#include <strongcomp/graph.hpp>
#include <strongcomp/graph_io.hpp>
#include <strongcomp/scc_result.hpp>
#include <strongcomp/tarjan.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace strongcomp {

/// Graph on the components. Vertex i (1..k) is the i-th component in
/// reverse topological emission order; leader[i] is its leader in the
/// original graph and component_of[v] the condensation vertex of v.
struct Condensation {
  Graph graph;
  std::vector<Vertex> leader{ no_vertex };
  std::vector<Vertex> component_of{ no_vertex };
};

/// One arc per ordered pair of adjacent distinct components. Built while
/// walking the components in reverse topological order: the arcs out of a
/// component can only enter components already walked, and a bit per leader
/// suppresses duplicates until the component is done.
inline Condensation condense(Graph const& g, SccResult const& scc_in)
{
  auto const n = g.vertex_count();
  validate_partition(n, scc_in);
  SccResult const scc = scc_in.order_kind == OrderKind::topological ? reversed_emission(scc_in) : scc_in;
  auto const k = scc.component_count();

  Condensation c;
  c.leader.resize(k + 1, no_vertex);
  c.component_of.assign(n + 1, no_vertex);
  for (std::size_t i = 0; i < k; ++i) {
    c.leader[i + 1] = scc.component_leader(i);
    for (auto v : scc.component(i)) c.component_of[v] = static_cast<Vertex>(i + 1);
  }

  std::vector<ArcEnds> arcs;
  std::vector<std::uint8_t> seen(n + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    auto const from = static_cast<Vertex>(i + 1);
    auto const added = arcs.size();
    for (auto v : scc.component(i))
      for (Arc a = g.first(v); a != no_arc; a = g.next(a)) {
        auto const to = c.component_of[g.tip(a)];
        auto const lw = scc.leader[g.tip(a)];
        if (to == from || seen[lw]) continue;
        seen[lw] = 1;
        arcs.push_back({ from, to });
      }
    for (std::size_t j = added; j < arcs.size(); ++j) seen[c.leader[arcs[j].head]] = 0;
  }
  c.graph = build_graph(k, arcs);
  return c;
}

/// Edge list of the condensation followed by the leader sidecar: one
/// "comp leader" line per condensation vertex.
inline std::string serialize_leader_sidecar(Condensation const& c)
{
  std::string out;
  for (std::size_t i = 1; i < c.leader.size(); ++i) {
    detail::append_uint(out, i);
    out += ' ';
    detail::append_uint(out, c.leader[i]);
    out += '\n';
  }
  return out;
}

/// Low arc of every follower (index 0 unused, no_arc for leaders).
struct LowArcForest {
  std::vector<Arc> lowarc{ no_arc };
};

/// Tree arcs per component (in emission order), each set an out-tree
/// rooted at the component leader.
struct OutTreeForest {
  std::vector<std::vector<Arc>> arcs;
};

/// Throws Error{unsupported} unless the run recorded low arcs.
inline LowArcForest build_in_trees(TarjanRun const& run)
{
  if (run.lowarc.size() != run.scc.leader.size())
    throw Error(ErrorCode::unsupported, "run did not record low arcs");
  return LowArcForest{ run.lowarc };
}

/// Depth-first forest minus the tree arcs entering leaders, grouped by the
/// component of the arc's head.
inline OutTreeForest build_out_trees(Graph const& g, std::span<Arc const> tree_arcs, SccResult const& scc)
{
  validate_partition(g.vertex_count(), scc);
  auto const idx = scc.component_index();
  OutTreeForest f;
  f.arcs.resize(scc.component_count());
  for (auto a : tree_arcs) {
    if (a < 1 || a > g.arc_count()) throw Error(ErrorCode::out_of_range, "tree arc id out of range");
    auto const h = g.tip(a);
    if (scc.leader[h] == h) continue;
    f.arcs[idx[h]].push_back(a);
  }
  return f;
}

struct Verdict {
  bool accepted = true;
  std::string reason;

  explicit operator bool() const noexcept { return accepted; }
};

/// Accepts iff every component is certified strongly connected (its
/// out-tree spans it from the leader and its in-tree reaches the leader
/// from every member, all inside the component) and every arc goes
/// backward or sideways in the emission order (forward for topological
/// emission), so no two components are mutually reachable.
inline Verdict verify_scc(Graph const& g, SccResult const& scc, LowArcForest const& in_trees, OutTreeForest const& out_trees)
{
  auto const n = g.vertex_count();
  validate_partition(n, scc);
  auto reject = [](std::string why) { return Verdict{ false, std::move(why) }; };
  auto const idx = scc.component_index();
  auto const k = scc.component_count();

  if (out_trees.arcs.size() != k) return reject("out-tree count does not match the component count");
  if (in_trees.lowarc.size() != n + 1) return reject("in-tree size does not match the vertex count");

  std::vector<Arc> entering(n + 1, no_arc);
  std::vector<std::vector<Vertex>> children(n + 1);
  for (std::size_t i = 0; i < k; ++i) {
    auto const comp = scc.component(i);
    auto const root = scc.component_leader(i);
    for (auto a : out_trees.arcs[i]) {
      if (a < 1 || a > g.arc_count()) return reject("out-tree arc id out of range");
      auto const [t, h] = g.ends(a);
      if (idx[t] != i || idx[h] != i)
        return reject("out-tree arc " + std::to_string(a) + " leaves component " + std::to_string(root));
      if (h == root || entering[h] != no_arc)
        return reject("out-tree of component " + std::to_string(root) + " is not a tree");
      entering[h] = a;
      children[t].push_back(h);
    }
    std::vector<Vertex> todo{ root };
    std::size_t reached = 0;
    while (!todo.empty()) {
      auto const v = todo.back();
      todo.pop_back();
      ++reached;
      for (auto c : children[v]) todo.push_back(c);
    }
    if (reached != comp.size())
      return reject("out-tree does not span component " + std::to_string(root));
  }

  // in-trees: follow low arcs to the leader; 1 = on the current walk, 2 = done
  std::vector<std::uint8_t> state(n + 1, 0);
  std::vector<Vertex> walk;
  for (Vertex v = 1; v <= n; ++v) {
    walk.clear();
    Vertex x = v;
    while (state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      auto const a = in_trees.lowarc[x];
      if (scc.leader[x] == x) {
        if (a != no_arc) return reject("leader " + std::to_string(x) + " has a low arc");
        break;
      }
      if (a < 1 || a > g.arc_count() || g.tail(a) != x)
        return reject("follower " + std::to_string(x) + " has no valid low arc");
      auto const h = g.tip(a);
      if (idx[h] != idx[x]) return reject("low arc of " + std::to_string(x) + " leaves its component");
      x = h;
    }
    if (state[x] == 1 && scc.leader[x] != x) return reject("low arcs form a cycle through " + std::to_string(x));
    for (auto u : walk) state[u] = 2;
  }

  bool const reverse = scc.order_kind == OrderKind::reverse_topological;
  for (Arc a = 1; a <= g.arc_count(); ++a) {
    auto const [t, h] = g.ends(a);
    bool const ok = reverse ? idx[t] >= idx[h] : idx[t] <= idx[h];
    if (!ok)
      return reject("arc " + std::to_string(t) + "->" + std::to_string(h) + " violates the component order");
  }
  return {};
}

/// Checks `scc` against certificates from a recorded single-pass run on g.
/// Leaders must be the minimum-preorder vertices of the default exploration,
/// which every algorithm here produces.
inline Verdict certify_scc(Graph const& g, SccResult const& scc)
{
  TarjanOptions o;
  o.record_lowarcs = true;
  auto const run = tarjan_run(g, o);
  return verify_scc(g, scc, build_in_trees(run), build_out_trees(g, run.tree_arcs, scc));
}

} // namespace strongcomp
