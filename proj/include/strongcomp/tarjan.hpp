#pragma once

// Single-pass strong components: the low computation plus a stack of
// postvisited followers, run inside one depth-first exploration.
//
// Per-vertex state is one integer (low) and one link word. The link word
// does triple duty under the arc-stack engine: arc-stack link until the
// vertex is postvisited, followers-stack link while it waits on F, and
// finally the leader of its component. The followers stack F is threaded
// through the link words with vertex 0 as a guard whose low is 0.
//
// low encoding:
//   plain           previsit sets low = time (time += 1); a separate lead
//                   flag drops on the first decrease
//   leader bits     previsit sets low = time (time += 2); a decrease stores
//                   the new minimum with bit 0 set, so even low = leader
// completed components get low = infinity (2n+1 plain, 4n+2 with leader
// bits) or, with numeric components, leader+n (2(leader+n) with bits).
//
// Register set under counting: v, a, w, s, time, the previsit count, the
// head of F, low(s), and low/lead of the current vertex. The current
// vertex's low is charged one write when it stops being current with a
// changed value and one read when a retreat makes it current again.

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

struct TarjanOptions {
  EngineKind engine = EngineKind::a_stack;
  bool encode_leader_bits = false;
  bool stop_early = false;
  bool numeric_components = false;
  bool record_lowarcs = false;
  /// False when the vertex count is not known up front; stop_early is then
  /// rejected.
  bool known_vertex_count = true;
  /// Tags each link word with its current use and checks the
  /// engine -> followers stack -> leader progression.
  bool audit_slots = false;
};

struct LeaderBits {
  bool is_leader;
  std::uint32_t decoded_time;

  friend bool operator==(LeaderBits const&, LeaderBits const&) = default;
};

/// Decodes a low value stored with the leader bit in bit 0.
constexpr LeaderBits leader_bit_ops(std::uint32_t low_encoded) noexcept
{
  return { (low_encoded & 1u) == 0, low_encoded >> 1 };
}

/// Stop-early condition: every vertex has been previsited and the current
/// vertex has the low value of the search's start vertex.
constexpr bool tarjan_stop_early_trigger(std::size_t previsited,
                                         std::size_t n,
                                         std::uint32_t low_current,
                                         std::uint32_t low_start,
                                         bool encoded) noexcept
{
  if (previsited != n) return false;
  return encoded ? (low_current >> 1) == (low_start >> 1) : low_current == low_start;
}

/// Output of one run: the components plus, with record_lowarcs, the tree
/// arcs and the low arc of every follower.
struct TarjanRun {
  SccResult scc;
  std::vector<Arc> tree_arcs;
  std::vector<Arc> lowarc;
  bool stopped_early = false;
  std::size_t starts = 0;
};

template<AccessPolicy Mem = Uncounted>
class TarjanVisitor {
public:
  static constexpr Vertex guard = 0;

  TarjanVisitor(Graph const& g, TarjanOptions const& opts, Mem& mem)
    : opts_(opts)
    , mem_(mem)
    , n_(static_cast<std::uint32_t>(g.vertex_count()))
    , step_(opts.encode_leader_bits ? 2u : 1u)
    , infinity_(opts.encode_leader_bits ? 4 * n_ + 2 : 2 * n_ + 1)
    , low_(n_ + 1, 0)
    , link_(n_ + 1, 0)
    , builder_(n_, OrderKind::reverse_topological, WithinOrder::postorder)
  {
    if (opts.stop_early && !opts.known_vertex_count)
      throw Error(ErrorCode::unsupported, "stop_early needs the vertex count up front");
    if (!opts.encode_leader_bits) lead_.assign(n_ + 1, 0);
    if (opts.record_lowarcs) {
      lowarc_.assign(n_ + 1, no_arc);
      parent_arc_.assign(n_ + 1, no_arc);
    }
    if (opts.audit_slots) epoch_.assign(n_ + 1, slot_free);
  }

  void start(std::size_t n)
  {
    time_ = 0;
    previsited_ = 0;
    low_[guard] = 0;
    f_top_ = guard;
    for (std::size_t v = 1; v <= n; ++v) mem_.write(low_[v], 0);
  }

  bool unvisited(Vertex v) { return mem_.read(low_[v]) == 0; }

  void search_start(Vertex s) { s_ = s; }

  void previsit(Vertex v)
  {
    time_ += step_;
    mem_.write(low_[v], time_);
    if (!opts_.encode_leader_bits) lead_[v] = 1;
    ++previsited_;
    if (v == s_) s_low_ = time_;
    dirty_ = false;
    if (opts_.audit_slots) epoch_[v] = v == s_ ? slot_free : slot_engine;
    if (opts_.stop_early) check_stop(v);
  }

  void tree_advance(Vertex v, Arc a, Vertex w)
  {
    if constexpr (Mem::counting)
      if (dirty_) mem_.charge_write();
    if (opts_.record_lowarcs) {
      tree_arcs_.push_back(a);
      parent_arc_[w] = a;
    }
    (void)v;
  }

  void tree_retreat(Vertex, Arc, Vertex)
  {
    // the parent's low comes back into a register
    if constexpr (Mem::counting) mem_.charge_read();
    dirty_ = false;
  }

  void retreat(Vertex v, Arc a, Vertex w)
  {
    // low(w) is register-resident here: either w was current until the
    // postvisit just done, or it was read by the unvisited test.
    auto const wl = low_[w];
    auto const vl = low_[v];
    if (wl < vl) {
      if (opts_.encode_leader_bits) {
        low_[v] = wl | 1u;
        if (opts_.record_lowarcs && (wl >> 1) < (vl >> 1)) lowarc_[v] = a;
      } else {
        low_[v] = wl;
        lead_[v] = 0;
        if (opts_.record_lowarcs) lowarc_[v] = a;
      }
      dirty_ = true;
    }
    if (opts_.stop_early) check_stop(v);
  }

  void postvisit(Vertex v)
  {
    if (opts_.audit_slots) {
      if (epoch_[v] != slot_engine && epoch_[v] != slot_free)
        detail::invariant_failure("link slot reused before the engine released it");
      link_[v] = 0xFFFFFFFFu;  // any later engine read of this slot would fault
    }
    bool const leader = opts_.encode_leader_bits ? (low_[v] & 1u) == 0 : lead_[v] != 0;
    if (!leader) {
      push_follower(v);
      if constexpr (Mem::counting)
        if (dirty_) mem_.charge_write();
      return;
    }
    scratch_.clear();
    while (mem_.read(low_[f_top_]) >= low_[v]) scratch_.push_back(pop_follower(v));
    emit_component(v);
  }

  bool stop_requested() const { return stop_; }

  /// Forms the last component from F and the current path (leaf first) and
  /// finishes the run.
  void on_stop(std::span<Vertex const> path)
  {
    auto const root = path.back();
    if (opts_.record_lowarcs) {
      // Path vertices that would still receive their final low on the
      // remaining retreats get the tree arc to their path child.
      auto const target = opts_.encode_leader_bits ? (s_low_ >> 1) : s_low_;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        auto const u = path[i];
        auto const ul = opts_.encode_leader_bits ? (low_[u] >> 1) : low_[u];
        if (ul > target) lowarc_[u] = parent_arc_[path[i - 1]];
      }
    }
    scratch_.clear();
    while (f_top_ != guard) scratch_.push_back(pop_follower(root));
    std::reverse(scratch_.begin(), scratch_.end());
    for (auto x : scratch_) builder_.add(x, root);
    for (auto u : path) {
      if (opts_.audit_slots) epoch_[u] = slot_leader;
      if (!opts_.numeric_components) mem_.write(link_[u], root);
      mem_.write(low_[u], completed_low(root));
      builder_.add(u, root);
    }
    builder_.close_component();
    stopped_ = true;
  }

  std::span<std::uint32_t> link_slots() { return link_; }

  /// Collects the result; throws if the follower stack is not back to the
  /// guard.
  TarjanRun finish(std::size_t starts) &&
  {
    if (f_top_ != guard) detail::invariant_failure("followers stack not empty at termination");
    TarjanRun run;
    run.scc = std::move(builder_).take();
    if (opts_.numeric_components) {
      // leaders recovered from the completed low values
      for (Vertex v = 1; v <= n_; ++v) run.scc.leader[v] = component_of(v);
    }
    run.tree_arcs = std::move(tree_arcs_);
    run.lowarc = std::move(lowarc_);
    run.stopped_early = stopped_;
    run.starts = starts;
    return run;
  }

  /// Leader of a completed vertex under numeric components.
  [[nodiscard]] Vertex component_of(Vertex v) const noexcept
  {
    auto const x = opts_.encode_leader_bits ? low_[v] / 2 : low_[v];
    return static_cast<Vertex>(x - n_);
  }

  [[nodiscard]] std::span<std::uint32_t const> low_values() const noexcept { return low_; }
  [[nodiscard]] std::span<std::uint32_t const> link_values() const noexcept { return link_; }

private:
  static constexpr std::uint8_t slot_free = 0;
  static constexpr std::uint8_t slot_engine = 1;
  static constexpr std::uint8_t slot_follower = 2;
  static constexpr std::uint8_t slot_leader = 3;

  [[nodiscard]] std::uint32_t completed_low(Vertex leader) const noexcept
  {
    if (!opts_.numeric_components) return infinity_;
    return opts_.encode_leader_bits ? 2 * (leader + n_) : leader + n_;
  }

  void check_stop(Vertex current)
  {
    if (tarjan_stop_early_trigger(previsited_, n_, low_[current], s_low_, opts_.encode_leader_bits)) stop_ = true;
  }

  void push_follower(Vertex v)
  {
    if (opts_.audit_slots) epoch_[v] = slot_follower;
    mem_.write(link_[v], f_top_);
    f_top_ = v;
  }

  Vertex pop_follower(Vertex leader)
  {
    auto const x = f_top_;
    if (x == guard) detail::invariant_failure("followers stack popped its guard");
    if (opts_.audit_slots) {
      if (epoch_[x] != slot_follower) detail::invariant_failure("popped vertex is not in its followers-stack phase");
      epoch_[x] = slot_leader;
    }
    f_top_ = mem_.read(link_[x]);
    if (!opts_.numeric_components) mem_.write(link_[x], leader);
    mem_.write(low_[x], completed_low(leader));
    return x;
  }

  void emit_component(Vertex v)
  {
    // F pops come off in reverse postorder; the leader is postvisited last
    for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) builder_.add(*it, v);
    builder_.add(v, v);
    builder_.close_component();
    if (opts_.audit_slots) epoch_[v] = slot_leader;
    if (!opts_.numeric_components) mem_.write(link_[v], v);
    mem_.write(low_[v], completed_low(v));
  }

  TarjanOptions opts_;
  Mem& mem_;
  std::uint32_t n_;
  std::uint32_t step_;
  std::uint32_t infinity_;
  std::vector<std::uint32_t> low_;
  std::vector<std::uint8_t> lead_;
  std::vector<std::uint32_t> link_;
  std::vector<Arc> lowarc_;
  std::vector<Arc> parent_arc_;
  std::vector<Arc> tree_arcs_;
  std::vector<std::uint8_t> epoch_;
  std::vector<Vertex> scratch_;
  SccBuilder builder_;
  std::uint32_t time_ = 0;
  std::size_t previsited_ = 0;
  Vertex s_ = no_vertex;
  std::uint32_t s_low_ = 0;
  Vertex f_top_ = guard;
  bool dirty_ = false;
  bool stop_ = false;
  bool stopped_ = false;
};

template<AccessPolicy Mem>
TarjanRun tarjan_run(Graph const& g, TarjanOptions const& opts, std::span<Vertex const> starts, Mem& mem)
{
  TarjanVisitor<Mem> vis(g, opts, mem);
  auto const stats = explore_with(g, opts.engine, vis, starts, mem);
  return std::move(vis).finish(stats.starts);
}

inline TarjanRun tarjan_run(Graph const& g, TarjanOptions const& opts = {}, std::span<Vertex const> starts = {})
{
  Uncounted mem;
  return tarjan_run(g, opts, starts, mem);
}

/// Strong components in reverse topological order, each listed in
/// postorder with its leader last.
inline SccResult scc_tarjan(Graph const& g, TarjanOptions const& opts = {}, std::span<Vertex const> starts = {})
{
  return tarjan_run(g, opts, starts).scc;
}

} // namespace strongcomp
