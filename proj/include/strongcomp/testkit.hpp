#pragma once

// Test support: a reachability oracle that shares no code with the
// depth-first engines, deterministic graph families, an exploration trace
// checker, result mutations, and a checking wrapper for the cycle-finding
// algorithm's state.

#include <strongcomp/cycle.hpp>
#include <strongcomp/dfs.hpp>
#include <strongcomp/error.hpp>
#include <strongcomp/graph.hpp>
#include <strongcomp/quick_search.hpp>
#include <strongcomp/scc_result.hpp>
#include <strongcomp/trace.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace strongcomp {

// Oracle

inline constexpr std::size_t default_oracle_limit = 256;

/// Component id per vertex (index 0 unused): the smallest vertex mutually
/// reachable with it.
struct OraclePartition {
  std::vector<Vertex> id{ no_vertex };

  friend bool operator==(OraclePartition const&, OraclePartition const&) = default;
};

/// Reachability closure by one quick search per vertex; O(n m).
inline std::vector<std::vector<bool>> reachability(Graph const& g, std::size_t limit = default_oracle_limit)
{
  auto const n = g.vertex_count();
  if (n > limit) throw Error(ErrorCode::too_large, "oracle limited to n <= " + std::to_string(limit));
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(n + 1, false));
  Uncounted mem;
  QuickSearch<Uncounted> qs(g, mem);
  for (Vertex u = 1; u <= n; ++u) {
    qs.reset();
    qs.search_from(u, [&](Vertex v) { reach[u][v] = true; });
  }
  return reach;
}

/// Throws Error{too_large} above `limit` vertices.
inline OraclePartition oracle_scc(Graph const& g, std::size_t limit = default_oracle_limit)
{
  auto const n = g.vertex_count();
  auto const reach = reachability(g, limit);
  OraclePartition p;
  p.id.assign(n + 1, no_vertex);
  for (Vertex v = 1; v <= n; ++v)
    for (Vertex u = 1; u <= v; ++u)
      if (reach[u][v] && reach[v][u]) {
        p.id[v] = u;
        break;
      }
  return p;
}

inline bool matches_oracle(SccResult const& scc, OraclePartition const& oracle)
{
  return canonical_labels(scc) == oracle.id;
}

// Generators

enum class Family { gnm_random, dag, cycle_chain, complete, multi_loop, deep_path };

inline constexpr std::array<Family, 6> all_families = {
  Family::gnm_random, Family::dag, Family::cycle_chain, Family::complete, Family::multi_loop, Family::deep_path,
};

constexpr std::string_view to_string(Family f) noexcept
{
  switch (f) {
  case Family::gnm_random: return "gnm";
  case Family::dag: return "dag";
  case Family::cycle_chain: return "cycle-chain";
  case Family::complete: return "complete";
  case Family::multi_loop: return "multi-loop";
  case Family::deep_path: return "deep-path";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) noexcept
{
  for (auto f : all_families)
    if (to_string(f) == name) return f;
  return std::nullopt;
}

/// `m` is ignored by complete and deep-path, and is a lower-bounded target
/// for cycle-chain, whose n + cycles - 1 ring and bridge arcs come first.
struct GenSpec {
  Family family = Family::gnm_random;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  std::size_t cycles = 2;
};

namespace detail {

inline Vertex uniform_vertex(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
  return static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
}

[[noreturn]] inline void bad_spec(std::string const& what)
{
  throw Error(ErrorCode::bad_spec, what);
}

} // namespace detail

/// Deterministic in the spec. Throws Error{bad_spec} for unsatisfiable specs.
inline Graph generate(GenSpec const& spec)
{
  using detail::bad_spec;
  using detail::uniform_vertex;
  std::mt19937_64 rng(spec.seed);
  auto const n = spec.n;
  if (n > 0xFFFFFFFEull) bad_spec("too many vertices");
  std::vector<ArcEnds> arcs;

  switch (spec.family) {
  case Family::gnm_random:
    if (n == 0 && spec.m > 0) bad_spec("gnm: arcs need vertices");
    arcs.reserve(spec.m);
    for (std::size_t i = 0; i < spec.m; ++i) arcs.push_back({ uniform_vertex(rng, 1, n), uniform_vertex(rng, 1, n) });
    break;

  case Family::dag: {
    if (n < 2 && spec.m > 0) bad_spec("dag: arcs need two vertices");
    std::vector<Vertex> rank(n + 1);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin() + 1, rank.end(), rng);
    for (std::size_t i = 0; i < spec.m; ++i) {
      auto u = uniform_vertex(rng, 1, n - 1);
      auto v = uniform_vertex(rng, u + 1, n);
      arcs.push_back({ rank[u], rank[v] });
    }
    break;
  }

  case Family::cycle_chain: {
    auto const k = spec.cycles;
    if (n == 0) {
      if (spec.m > 0 || k > 0) bad_spec("cycle-chain: empty graph takes no cycles or arcs");
      break;
    }
    if (k < 1 || k > n) bad_spec("cycle-chain: need 1 <= cycles <= n");
    // cycle i holds vertices [begin[i], begin[i+1])
    std::vector<std::size_t> begin(k + 1);
    for (std::size_t i = 0; i <= k; ++i) begin[i] = 1 + i * n / k;
    for (std::size_t i = 0; i < k; ++i) {
      for (auto v = begin[i]; v + 1 < begin[i + 1]; ++v) arcs.push_back({ static_cast<Vertex>(v), static_cast<Vertex>(v + 1) });
      arcs.push_back({ static_cast<Vertex>(begin[i + 1] - 1), static_cast<Vertex>(begin[i]) });
      if (i + 1 < k) arcs.push_back({ static_cast<Vertex>(begin[i + 1] - 1), static_cast<Vertex>(begin[i + 1]) });
    }
    // extra arcs only run from a cycle to itself or a later one
    while (arcs.size() < spec.m) {
      auto const ci = uniform_vertex(rng, 0, k - 1);
      auto const cj = uniform_vertex(rng, ci, k - 1);
      arcs.push_back({ uniform_vertex(rng, begin[ci], begin[ci + 1] - 1), uniform_vertex(rng, begin[cj], begin[cj + 1] - 1) });
    }
    break;
  }

  case Family::complete:
    for (std::size_t u = 1; u <= n; ++u)
      for (std::size_t v = 1; v <= n; ++v)
        if (u != v) arcs.push_back({ static_cast<Vertex>(u), static_cast<Vertex>(v) });
    std::shuffle(arcs.begin(), arcs.end(), rng);
    break;

  case Family::multi_loop: {
    if (n == 0 && spec.m > 0) bad_spec("multi-loop: arcs need vertices");
    for (std::size_t i = 0; i < spec.m; ++i) arcs.push_back({ uniform_vertex(rng, 1, n), uniform_vertex(rng, 1, n) });
    if (spec.m >= 1) {
      auto const x = uniform_vertex(rng, 1, n);
      arcs[0] = { x, x };
    }
    if (spec.m >= 3) arcs[2] = arcs[1];
    std::shuffle(arcs.begin(), arcs.end(), rng);
    break;
  }

  case Family::deep_path:
    if (n > 0) arcs.reserve(n - 1);
    for (std::size_t v = 1; v < n; ++v) arcs.push_back({ static_cast<Vertex>(v), static_cast<Vertex>(v + 1) });
    break;
  }
  return build_graph(n, arcs);
}

/// Reproducible property-test corpus: `count` specs per family with
/// n <= 64 and m <= 512, drawn from `seed`.
inline std::vector<GenSpec> corpus_specs(Family family, std::size_t count, std::uint64_t seed = 20240601)
{
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(family) + 1)));
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::vector<GenSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GenSpec s;
    s.family = family;
    s.seed = rng();
    switch (family) {
    case Family::gnm_random:
    case Family::multi_loop:
      s.n = pick(0, 64);
      s.m = s.n == 0 ? 0 : pick(0, std::min<std::size_t>(512, 4 * s.n + 8));
      break;
    case Family::dag:
      s.n = pick(0, 64);
      s.m = s.n < 2 ? 0 : pick(0, std::min<std::size_t>(512, 3 * s.n));
      break;
    case Family::cycle_chain:
      s.n = pick(0, 64);
      s.cycles = s.n == 0 ? 0 : pick(1, std::min<std::size_t>(s.n, 8));
      s.m = s.n == 0 ? 0 : pick(s.n + s.cycles - 1, std::min<std::size_t>(512, 3 * s.n + s.cycles));
      break;
    case Family::complete:
      s.n = pick(0, 22);
      break;
    case Family::deep_path:
      s.n = pick(0, 64);
      break;
    }
    out.push_back(s);
  }
  return out;
}

/// Every family, `per_family` graphs each.
inline std::vector<GenSpec> full_corpus(std::size_t per_family = 1000, std::uint64_t seed = 20240601)
{
  std::vector<GenSpec> out;
  for (auto f : all_families) {
    auto part = corpus_specs(f, per_family, seed);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// The first `count` corpus graphs, taken round-robin over the families.
inline std::vector<GenSpec> mixed_corpus(std::size_t count, std::uint64_t seed = 20240601)
{
  auto const per = (count + all_families.size() - 1) / all_families.size();
  std::vector<std::vector<GenSpec>> parts;
  for (auto f : all_families) parts.push_back(corpus_specs(f, per, seed));
  std::vector<GenSpec> out;
  for (std::size_t i = 0; out.size() < count; ++i)
    for (auto& p : parts)
      if (out.size() < count) out.push_back(p[i]);
  return out;
}

// Trace checking

/// Returns an empty list iff the trace is a well-formed complete
/// exploration of g: each vertex previsited and postvisited once with
/// properly nested intervals, every arc advanced from the current vertex
/// and retreated exactly once, non-tree retreats immediately after their
/// advance, and tree retreats right after the child's postvisit.
inline std::vector<std::string> check_trace(ExplorationTrace const& trace, Graph const& g)
{
  auto const n = g.vertex_count();
  auto const m = g.arc_count();
  std::vector<std::string> diag;
  auto say = [&](std::string s) {
    if (diag.size() < 32) diag.push_back(std::move(s));
  };
  auto vname = [](Vertex v) { return std::to_string(v); };
  auto arc_ok = [&](TraceEvent const& e) {
    return e.a >= 1 && e.a <= m && g.tail(e.a) == e.v && g.tip(e.a) == e.w;
  };

  // adv: 1 non-tree, 2 tree; tret: tree retreat seen
  std::vector<std::uint8_t> pre(n + 1, 0), post(n + 1, 0), adv(m + 1, 0), ret(m + 1, 0), tret(m + 1, 0);
  std::vector<Vertex> path;
  // arc whose retreat is due next: non-tree advance or post-return
  Arc pending = no_arc;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    auto const& e = trace[i];
    if (pending != no_arc && !(e.kind == EventKind::retreat && e.a == pending) &&
        !(e.kind == EventKind::tree_retreat && e.a == pending)) {
      say("arc " + std::to_string(pending) + " not retreated immediately (event " + std::to_string(i) + ")");
      pending = no_arc;
    }
    switch (e.kind) {
    case EventKind::search_start:
      if (!path.empty()) say("search start " + vname(e.v) + " while a search is active");
      break;
    case EventKind::previsit:
      if (e.v < 1 || e.v > n) {
        say("previsit of out-of-range vertex " + vname(e.v));
        break;
      }
      if (pre[e.v]++) say("vertex " + vname(e.v) + " previsited twice");
      path.push_back(e.v);
      break;
    case EventKind::postvisit:
      if (e.v < 1 || e.v > n) {
        say("postvisit of out-of-range vertex " + vname(e.v));
        break;
      }
      if (post[e.v]++) say("vertex " + vname(e.v) + " postvisited twice");
      if (path.empty() || path.back() != e.v) {
        say("postvisit of " + vname(e.v) + " breaks nesting");
        auto it = std::find(path.begin(), path.end(), e.v);
        if (it != path.end()) path.erase(it);
      } else {
        path.pop_back();
      }
      for (Arc a = g.first(e.v); a != no_arc; a = g.next(a))
        if (!adv[a]) say("vertex " + vname(e.v) + " postvisited before advancing arc " + std::to_string(a));
      break;
    case EventKind::tree_advance:
    case EventKind::nontree_traverse:
      if (!arc_ok(e)) {
        say("advance names a bad arc " + std::to_string(e.a));
        break;
      }
      if (path.empty() || path.back() != e.v) say("arc " + std::to_string(e.a) + " advanced from a non-current vertex");
      if (adv[e.a]) say("arc " + std::to_string(e.a) + " advanced twice");
      adv[e.a] = e.kind == EventKind::tree_advance ? 2 : 1;
      if (e.kind == EventKind::nontree_traverse) {
        pending = e.a;
      } else if (i + 1 >= trace.size() || trace[i + 1].kind != EventKind::previsit || trace[i + 1].v != e.w) {
        say("tree arc " + std::to_string(e.a) + " not followed by previsit of its tip");
      }
      break;
    case EventKind::tree_retreat:
      if (!arc_ok(e)) {
        say("tree retreat names a bad arc " + std::to_string(e.a));
        break;
      }
      if (i == 0 || trace[i - 1].kind != EventKind::postvisit || trace[i - 1].v != e.w)
        say("tree retreat on arc " + std::to_string(e.a) + " not right after the postvisit of " + vname(e.w));
      if (adv[e.a] != 2) say("tree retreat on non-tree arc " + std::to_string(e.a));
      tret[e.a] = 1;
      pending = e.a;
      break;
    case EventKind::retreat:
      if (!arc_ok(e)) {
        say("retreat names a bad arc " + std::to_string(e.a));
        break;
      }
      if (!adv[e.a]) say("arc " + std::to_string(e.a) + " retreated before its advance");
      if (ret[e.a]++) say("arc " + std::to_string(e.a) + " retreated twice");
      if (adv[e.a] == 2 && !tret[e.a]) say("tree arc " + std::to_string(e.a) + " retreated without its tree retreat");
      if (path.empty() || path.back() != e.v) say("retreat on arc " + std::to_string(e.a) + " breaks nesting");
      pending = no_arc;
      break;
    }
  }
  if (pending != no_arc) say("arc " + std::to_string(pending) + " never retreated");
  for (Vertex v = 1; v <= n; ++v) {
    if (!pre[v]) say("vertex " + vname(v) + " never previsited");
    if (!post[v]) say("vertex " + vname(v) + " never postvisited");
  }
  for (Arc a = 1; a <= m; ++a) {
    if (!adv[a]) say("arc " + std::to_string(a) + " never advanced");
    if (!ret[a]) say("arc " + std::to_string(a) + " never retreated");
  }
  return diag;
}

// Mutations of a correct result

enum class MutationKind { merge, split, leader_swap };

inline constexpr std::array<MutationKind, 3> all_mutations = { MutationKind::merge, MutationKind::split, MutationKind::leader_swap };

constexpr std::string_view to_string(MutationKind k) noexcept
{
  switch (k) {
  case MutationKind::merge: return "merge";
  case MutationKind::split: return "split";
  case MutationKind::leader_swap: return "leader-swap";
  }
  return "?";
}

/// Applies one edit; empty when the result has no place for it (merge
/// needs two components, split and leader swap a component of size >= 2).
inline std::optional<SccResult> mutate(SccResult const& scc, MutationKind kind, std::mt19937_64& rng)
{
  auto const k = scc.component_count();
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> leaders;
  for (std::size_t i = 0; i < k; ++i) {
    auto const c = scc.component(i);
    comps.emplace_back(c.begin(), c.end());
    leaders.push_back(scc.component_leader(i));
  }
  auto pick = [&](std::size_t hi) { return std::uniform_int_distribution<std::size_t>(0, hi - 1)(rng); };
  std::vector<std::size_t> big;
  for (std::size_t i = 0; i < k; ++i)
    if (comps[i].size() >= 2) big.push_back(i);

  switch (kind) {
  case MutationKind::merge: {
    if (k < 2) return std::nullopt;
    auto i = pick(k), j = pick(k - 1);
    if (j >= i) ++j;
    if (j < i) std::swap(i, j);
    comps[i].insert(comps[i].end(), comps[j].begin(), comps[j].end());
    comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(j));
    leaders.erase(leaders.begin() + static_cast<std::ptrdiff_t>(j));
    break;
  }
  case MutationKind::split: {
    if (big.empty()) return std::nullopt;
    auto const i = big[pick(big.size())];
    auto members = comps[i];
    std::shuffle(members.begin(), members.end(), rng);
    auto const cut = 1 + pick(members.size() - 1);
    // the leader stays, `cut` of the other members leave
    std::vector<Vertex> keep{ leaders[i] }, away;
    for (auto v : members)
      if (v != leaders[i]) (away.size() < cut ? away : keep).push_back(v);
    comps[i] = keep;
    comps.insert(comps.begin() + static_cast<std::ptrdiff_t>(i) + 1, away);
    leaders.insert(leaders.begin() + static_cast<std::ptrdiff_t>(i) + 1, away.front());
    break;
  }
  case MutationKind::leader_swap: {
    if (big.empty()) return std::nullopt;
    auto const i = big[pick(big.size())];
    std::vector<Vertex> others;
    for (auto v : comps[i])
      if (v != leaders[i]) others.push_back(v);
    leaders[i] = others[pick(others.size())];
    break;
  }
  }

  SccBuilder b(scc.vertex_count(), scc.order_kind, scc.within_order);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    // list the leader first so component_leader() sees it
    b.add(leaders[i], leaders[i]);
    for (auto v : comps[i])
      if (v != leaders[i]) b.add(v, leaders[i]);
    b.close_component();
  }
  return std::move(b).take();
}

// Cycle-finding state checker

/// Wraps the cycle-finding visitor, shadows its strongly connected sets
/// with a union-find structure driven only by the observed events, and
/// checks after every event that
///   (i)   the vertices in sets are exactly the previsited, unfinished ones
///   (ii)  L lists a subsequence of the current path, in path order
///   (iii) each set's leader has the minimum pre in its set
///   (iv)  the leader of every path vertex is on L
///   (v)   a live vertex belongs to the set of the last L entry whose pre
///         does not exceed its own
///   (vi)  a set grown by a non-tree arc is strongly connected, and the
///         arc plus the path from the surviving leader closes a cycle
///         through every absorbed leader
///   (vii) a set popped at a postvisit is a strong component (oracle)
/// For small graphs; the checks cost O(n + m) per event.
class CycleInvariantChecker {
public:
  CycleInvariantChecker(Graph const& g, CycleOptions const& opts)
    : g_(g), mem_(), inner_(g, opts, mem_), oracle_(oracle_scc(g)), n_(g.vertex_count())
  {
    parent_.resize(n_ + 1);
    std::iota(parent_.begin(), parent_.end(), 0);
    set_leader_.assign(n_ + 1, no_vertex);
    in_set_.assign(n_ + 1, 0);
    done_.assign(n_ + 1, 0);
  }

  void start(std::size_t n) { inner_.start(n); }
  bool unvisited(Vertex v) { return inner_.unvisited(v); }
  void search_start(Vertex s) { inner_.search_start(s); }

  void previsit(Vertex v)
  {
    inner_.previsit(v);
    path_.push_back(v);
    in_set_[v] = 1;
    set_leader_[v] = v;
    check_all("previsit " + std::to_string(v));
  }

  void nontree_traverse(Vertex v, Arc a, Vertex w)
  {
    auto const before = inner_.leaders();
    inner_.nontree_traverse(v, a, w);
    auto const after = inner_.leaders();
    if (after.size() > before.size() || !std::equal(after.begin(), after.end(), before.begin()))
      fail("non-tree arc " + std::to_string(a) + " changed L other than by popping");
    if (after.size() < before.size()) {
      if (after.empty()) {
        fail("non-tree arc " + std::to_string(a) + " emptied L");
        return;
      }
      auto const top = after.back();
      for (auto i = after.size(); i < before.size(); ++i) unite(before[i], top);
      check_witness(v, w, top, std::vector<Vertex>(before.begin() + static_cast<std::ptrdiff_t>(after.size()), before.end()));
      check_strong(top, "arc " + std::to_string(a));
    }
    check_all("non-tree arc " + std::to_string(a));
  }

  void retreat(Vertex v, Arc a, Vertex w) { inner_.retreat(v, a, w); }

  void postvisit(Vertex v)
  {
    auto const before = inner_.leaders();
    bool const was_top = !before.empty() && before.back() == v;
    inner_.postvisit(v);
    if (path_.empty() || path_.back() != v) fail("postvisit off the path");
    else path_.pop_back();
    if (was_top) retire(v, "postvisit " + std::to_string(v));
    check_all("postvisit " + std::to_string(v));
  }

  bool stop_requested() const { return inner_.stop_requested(); }

  void on_stop(std::span<Vertex const> path)
  {
    inner_.on_stop(path);
    path_.clear();
    retire(path.back(), "stop");
  }

  [[nodiscard]] std::vector<std::string> const& violations() const noexcept { return violations_; }
  [[nodiscard]] std::size_t events_checked() const noexcept { return events_; }
  SccResult finish() && { return std::move(inner_).finish(); }

private:
  Vertex find(Vertex x)
  {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  Vertex leader_of(Vertex x) { return set_leader_[find(x)]; }

  void unite(Vertex absorbed_leader, Vertex survivor)
  {
    auto const a = find(absorbed_leader), b = find(survivor);
    if (a == b) {
      fail("absorbed leader already in the surviving set");
      return;
    }
    parent_[a] = b;
    set_leader_[b] = survivor;
  }

  void fail(std::string what)
  {
    if (violations_.size() < 16) violations_.push_back(std::move(what));
  }

  std::vector<Vertex> members(Vertex leader)
  {
    std::vector<Vertex> out;
    for (Vertex x = 1; x <= n_; ++x)
      if (in_set_[x] && !done_[x] && leader_of(x) == leader) out.push_back(x);
    return out;
  }

  // BFS from `from` inside `allowed`; optionally backwards.
  std::vector<std::uint8_t> reach_within(Vertex from, std::vector<std::uint8_t> const& allowed, bool backward)
  {
    std::vector<std::uint8_t> seen(n_ + 1, 0);
    std::vector<Vertex> todo{ from };
    seen[from] = 1;
    while (!todo.empty()) {
      auto const x = todo.back();
      todo.pop_back();
      for (Arc a = 1; a <= g_.arc_count(); ++a) {
        auto const [t, h] = g_.ends(a);
        auto const src = backward ? h : t;
        auto const dst = backward ? t : h;
        if (src == x && allowed[dst] && !seen[dst]) {
          seen[dst] = 1;
          todo.push_back(dst);
        }
      }
    }
    return seen;
  }

  void check_strong(Vertex leader, std::string const& where)
  {
    auto const mem = members(leader);
    std::vector<std::uint8_t> allowed(n_ + 1, 0);
    for (auto x : mem) allowed[x] = 1;
    auto const fwd = reach_within(leader, allowed, false);
    auto const bwd = reach_within(leader, allowed, true);
    for (auto x : mem)
      if (!fwd[x] || !bwd[x]) fail("(vi) set of " + std::to_string(leader) + " not strongly connected after " + where);
  }

  void check_witness(Vertex v, Vertex w, Vertex top, std::vector<Vertex> const& absorbed)
  {
    auto const it_top = std::find(path_.begin(), path_.end(), top);
    auto const it_v = std::find(path_.begin(), path_.end(), v);
    if (it_top == path_.end() || it_v == path_.end() || it_top > it_v) {
      fail("(vi) no tree path from surviving leader to the current vertex");
      return;
    }
    for (auto l : absorbed)
      if (std::find(it_top, it_v + 1, l) == it_v + 1) fail("(vi) absorbed leader " + std::to_string(l) + " off the cycle path");
    if (leader_of(w) != top || done_[w]) fail("(vi) arc tip outside the surviving set");
  }

  void retire(Vertex leader, std::string const& where)
  {
    auto const mem = members(leader);
    auto const id = oracle_.id[leader];
    std::size_t expect = 0;
    for (Vertex x = 1; x <= n_; ++x) expect += oracle_.id[x] == id;
    bool ok = mem.size() == expect;
    for (auto x : mem) ok = ok && oracle_.id[x] == id;
    if (!ok) fail("(vii) set of " + std::to_string(leader) + " at " + where + " is not a strong component");
    for (auto x : mem) {
      done_[x] = 1;
      if (!inner_.completed(x) || inner_.assigned_leader(x) != leader)
        fail("(vii) vertex " + std::to_string(x) + " not declared with leader " + std::to_string(leader));
    }
  }

  void check_all(std::string const& where)
  {
    ++events_;
    auto const L = inner_.leaders();
    auto const F = inner_.followers();
    std::vector<std::uint8_t> on_l(n_ + 1, 0), on_f(n_ + 1, 0), on_path(n_ + 1, 0);
    for (auto x : L) on_l[x] = 1;
    for (auto x : F) on_f[x] = 1;
    for (auto x : path_) on_path[x] = 1;

    for (Vertex x = 1; x <= n_; ++x) {
      auto const p = inner_.pre(x);
      bool const live = in_set_[x] && !done_[x];
      // (i)
      if (live != (p != 0 && p != inner_.infinity())) fail("(i) vertex " + std::to_string(x) + " set membership vs pre at " + where);
      if (live && on_l[x] == on_f[x]) fail("(i) live vertex " + std::to_string(x) + " not on exactly one of L, F at " + where);
      if (!live && (on_l[x] || on_f[x])) fail("(i) finished vertex " + std::to_string(x) + " still stacked at " + where);
    }
    // (ii)
    std::size_t j = 0;
    for (auto x : path_)
      if (j < L.size() && L[j] == x) ++j;
    if (j != L.size()) fail("(ii) L is not a subsequence of the path at " + where);
    // (iii) and (v)
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (leader_of(L[i]) != L[i]) fail("(iii) L entry " + std::to_string(L[i]) + " is not its set's leader at " + where);
      if (i > 0 && inner_.pre(L[i - 1]) >= inner_.pre(L[i])) fail("(iii) L not increasing in pre at " + where);
    }
    for (Vertex x = 1; x <= n_; ++x) {
      if (!in_set_[x] || done_[x]) continue;
      auto const l = leader_of(x);
      if (inner_.pre(l) > inner_.pre(x)) fail("(iii) leader of " + std::to_string(x) + " has larger pre at " + where);
      Vertex expect = no_vertex;
      for (auto y : L)
        if (inner_.pre(y) <= inner_.pre(x)) expect = y;
      if (expect != l) fail("(v) vertex " + std::to_string(x) + " outside its pre interval at " + where);
    }
    // (iv)
    for (auto x : path_)
      if (!on_l[leader_of(x)]) fail("(iv) leader of path vertex " + std::to_string(x) + " not on L at " + where);
  }

  Graph const& g_;
  Uncounted mem_;
  CycleVisitor<Uncounted> inner_;
  OraclePartition oracle_;
  std::size_t n_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> set_leader_;
  std::vector<std::uint8_t> in_set_;
  std::vector<std::uint8_t> done_;
  std::vector<Vertex> path_;
  std::vector<std::string> violations_;
  std::size_t events_ = 0;
};

struct CycleCheckReport {
  std::vector<std::string> violations;
  std::size_t events = 0;
  SccResult scc;
};

inline CycleCheckReport check_cycle_invariants(Graph const& g, CycleOptions const& opts = {})
{
  CycleInvariantChecker chk(g, opts);
  explore_with(g, opts.engine, chk);
  CycleCheckReport r;
  r.violations = chk.violations();
  r.events = chk.events_checked();
  r.scc = std::move(chk).finish();
  return r;
}

} // namespace strongcomp
