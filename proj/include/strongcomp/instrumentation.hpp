#pragma once

// Memory-access counting runs and the closed-form access bounds.
//
// Register set per tag (values never tallied):
//
//   tag        engine  registers
//   V_STACK    V       v, a, w, s, stack index
//   A_STACK    A       v, a, w, s, arc stack head P
//   QUICK      -       v, w, a, stack top
//   TARJAN_A   A       as A_STACK plus time, previsit count, F head, low(s),
//                      low of the current vertex (written back when it
//                      changes and stops being current, reloaded on retreat)
//   CYCLE_A    A       as A_STACK plus time, previsit count, F head, L top,
//                      pre of the L top, |L|
//   BIDI       A+Q     forward as A_STACK, backward as QUICK, assigned count
//
// The tip word read by the unvisited test stays in a register for the
// handler that follows it.

#include <strongcomp/bidirectional.hpp>
#include <strongcomp/cycle.hpp>
#include <strongcomp/dfs.hpp>
#include <strongcomp/error.hpp>
#include <strongcomp/graph.hpp>
#include <strongcomp/memory_model.hpp>
#include <strongcomp/quick_search.hpp>
#include <strongcomp/scc_result.hpp>
#include <strongcomp/tarjan.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace strongcomp {

enum class CountTag { v_stack, a_stack, quick, tarjan_a, cycle_a, bidi };

inline constexpr std::array<CountTag, 6> all_count_tags = {
  CountTag::v_stack, CountTag::a_stack, CountTag::quick, CountTag::tarjan_a, CountTag::cycle_a, CountTag::bidi,
};

constexpr std::string_view to_string(CountTag tag) noexcept
{
  switch (tag) {
  case CountTag::v_stack: return "V_STACK";
  case CountTag::a_stack: return "A_STACK";
  case CountTag::quick: return "QUICK";
  case CountTag::tarjan_a: return "TARJAN_A";
  case CountTag::cycle_a: return "CYCLE_A";
  case CountTag::bidi: return "BIDI";
  }
  return "?";
}

/// Throws Error{unknown_tag} for names outside the table.
inline CountTag parse_count_tag(std::string_view name)
{
  for (auto t : all_count_tags)
    if (to_string(t) == name) return t;
  throw Error(ErrorCode::unknown_tag, "unknown count tag '" + std::string(name) + "'");
}

struct LinearBound {
  std::uint64_t per_arc;
  std::uint64_t per_vertex;
};

constexpr LinearBound bound_coefficients(CountTag tag) noexcept
{
  switch (tag) {
  case CountTag::v_stack: return { 3, 10 };
  case CountTag::a_stack: return { 3, 9 };
  case CountTag::quick: return { 3, 5 };
  case CountTag::tarjan_a: return { 3, 16 };
  case CountTag::cycle_a: return { 3, 18 };
  case CountTag::bidi: return { 6, 14 };
  }
  return { 0, 0 };
}

constexpr std::uint64_t bound(CountTag tag, std::uint64_t m, std::uint64_t n) noexcept
{
  auto const c = bound_coefficients(tag);
  return c.per_arc * m + c.per_vertex * n;
}

inline std::uint64_t bound(std::string_view tag, std::uint64_t m, std::uint64_t n)
{
  return bound(parse_count_tag(tag), m, n);
}

/// Additive allowance on top of the linear bound: per search start and per
/// component, plus a constant.
struct SlackConfig {
  std::uint64_t per_start_or_component = 8;
  std::uint64_t constant = 32;
};

inline constexpr SlackConfig default_slack{};

struct AccessReport {
  CountTag tag = CountTag::a_stack;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t starts = 0;
  std::uint64_t components = 0;
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;

  [[nodiscard]] std::uint64_t total() const noexcept { return reads + writes; }
  [[nodiscard]] std::uint64_t bound() const noexcept { return strongcomp::bound(tag, m, n); }

  [[nodiscard]] std::uint64_t slack(SlackConfig const& cfg = default_slack) const noexcept
  {
    return cfg.per_start_or_component * (starts + components) + cfg.constant;
  }

  [[nodiscard]] bool within_bound(SlackConfig const& cfg = default_slack) const noexcept
  {
    return total() <= bound() + slack(cfg);
  }

  static constexpr std::string_view csv_header = "tag,n,m,starts,components,reads,writes,total,bound";

  /// tag,n,m,starts,components,reads,writes,total,bound
  [[nodiscard]] std::string to_csv() const
  {
    std::string out(to_string(tag));
    for (auto x : { n, m, starts, components, reads, writes, total(), bound() }) {
      out += ',';
      out += std::to_string(x);
    }
    return out;
  }
};

struct CountOptions {
  /// Engine for the DFS-based tags; the tag's own engine when empty.
  std::optional<EngineKind> engine;
  bool stop_early = false;
  bool encode_leader_bits = false;
  bool numeric_components = false;
};

struct CountedRun {
  std::optional<SccResult> scc;
  AccessReport report;
};

namespace detail {

inline EngineKind natural_engine(CountTag tag) noexcept
{
  return tag == CountTag::v_stack ? EngineKind::v_stack : EngineKind::a_stack;
}

} // namespace detail

/// Runs the canonical implementation for `tag` with every per-vertex and
/// per-arc access tallied. The recursive engine is rejected: its frames are
/// not part of the model.
inline CountedRun counted_run(CountTag tag, Graph const& g, CountOptions const& opts = {})
{
  auto const engine = opts.engine.value_or(detail::natural_engine(tag));
  if (engine == EngineKind::recursive)
    throw Error(ErrorCode::unsupported, "counting is defined for the V and A engines only");
  AccessCounter mem;
  CountedRun run;
  auto& r = run.report;
  r.tag = tag;
  r.n = g.vertex_count();
  r.m = g.arc_count();
  switch (tag) {
  case CountTag::v_stack:
  case CountTag::a_stack: {
    MarkVisitor<AccessCounter> vis(mem);
    r.starts = explore_with(g, engine, vis, {}, mem).starts;
    break;
  }
  case CountTag::quick: {
    QuickSearchStats stats;
    quick_search(g, {}, [](Vertex) {}, mem, &stats);
    r.starts = stats.starts;
    break;
  }
  case CountTag::tarjan_a: {
    TarjanOptions t;
    t.engine = engine;
    t.stop_early = opts.stop_early;
    t.encode_leader_bits = opts.encode_leader_bits;
    t.numeric_components = opts.numeric_components;
    auto tr = tarjan_run(g, t, {}, mem);
    r.starts = tr.starts;
    run.scc = std::move(tr.scc);
    break;
  }
  case CountTag::cycle_a: {
    CycleOptions c;
    c.engine = engine;
    c.stop_early = opts.stop_early;
    CycleVisitor<AccessCounter> vis(g, c, mem);
    r.starts = explore_with(g, engine, vis, {}, mem).starts;
    run.scc = std::move(vis).finish();
    break;
  }
  case CountTag::bidi: {
    auto const g_rev = reverse_graph(g);
    BidiOptions b;
    b.engine = engine;
    b.stop_early = opts.stop_early;
    ExploreStats fwd;
    run.scc = scc_bidirectional(g, g_rev, b, {}, mem, &fwd);
    // forward starts plus one backward start per component
    r.starts = fwd.starts + run.scc->component_count();
    break;
  }
  }
  if (run.scc) r.components = run.scc->component_count();
  r.reads = mem.reads;
  r.writes = mem.writes;
  return run;
}

} // namespace strongcomp
