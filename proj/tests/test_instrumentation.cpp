#include <strongcomp/instrumentation.hpp>
#include <strongcomp/testkit.hpp>

#include <gtest/gtest.h>

using namespace strongcomp;

TEST(Bounds, Coefficients)
{
  EXPECT_EQ(bound(CountTag::tarjan_a, 10, 4), 94u);
  EXPECT_EQ(bound(CountTag::bidi, 5, 3), 72u);
  EXPECT_EQ(bound("QUICK", 2, 2), 16u);
  EXPECT_EQ(bound("V_STACK", 0, 1), 10u);
  EXPECT_EQ(bound("A_STACK", 1, 0), 3u);
  EXPECT_EQ(bound("CYCLE_A", 1, 1), 21u);
}

TEST(Bounds, UnknownTag)
{
  try {
    bound("TARJAN", 1, 1);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_tag);
  }
}

TEST(Bounds, TagNamesRoundTrip)
{
  for (auto t : all_count_tags) EXPECT_EQ(parse_count_tag(to_string(t)), t);
}

TEST(Report, CsvAndSlack)
{
  AccessReport r{ CountTag::quick, 3, 2, 1, 0, 10, 5 };
  EXPECT_EQ(r.total(), 15u);
  EXPECT_EQ(r.bound(), 21u);
  EXPECT_EQ(r.slack(), 40u);
  EXPECT_TRUE(r.within_bound());
  EXPECT_EQ(r.to_csv(), "QUICK,3,2,1,0,10,5,15,21");
  EXPECT_FALSE(r.within_bound(SlackConfig{ 0, 0 }) && r.total() > r.bound());
}

TEST(Counted, IsolatedVertices)
{
  for (std::uint64_t n : { 1u, 7u, 30u }) {
    auto const g = build_graph(n, {});
    auto const b = counted_run(CountTag::bidi, g).report;
    EXPECT_EQ(b.reads, 6 * n);
    EXPECT_EQ(b.writes, 5 * n);
    EXPECT_EQ(b.starts, 2 * n);
    EXPECT_EQ(b.components, n);
  }
}

TEST(Counted, EmptyGraphCostsNothing)
{
  for (auto t : all_count_tags) EXPECT_EQ(counted_run(t, build_graph(0, {})).report.total(), 0u) << to_string(t);
}

TEST(Counted, RecursiveEngineRejected)
{
  CountOptions o;
  o.engine = EngineKind::recursive;
  try {
    counted_run(CountTag::tarjan_a, build_graph(1, {}), o);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported);
  }
}

TEST(Counted, WithinBoundOnCorpus)
{
  for (auto const& spec : mixed_corpus(300, 51))
    for (auto t : all_count_tags)
      for (bool stop : { false, true }) {
        CountOptions o;
        o.stop_early = stop;
        auto const r = counted_run(t, generate(spec), o).report;
        EXPECT_TRUE(r.within_bound()) << r.to_csv();
        EXPECT_LE(r.total(), r.bound()) << r.to_csv();
      }
}

TEST(Counted, ArcSlope)
{
  // extra loops at vertex 1 add a fixed number of accesses per arc
  for (auto const& spec : mixed_corpus(100, 52)) {
    auto const g = generate(spec);
    if (g.vertex_count() == 0) continue;
    auto arcs = g.arc_list();
    auto const base = build_graph(g.vertex_count(), arcs);
    arcs.push_back({ 1, 1 });
    auto const more = build_graph(g.vertex_count(), arcs);
    for (auto t : all_count_tags) {
      auto const d = counted_run(t, more).report.total() - counted_run(t, base).report.total();
      EXPECT_EQ(d, bound_coefficients(t).per_arc) << to_string(t);
    }
  }
}

TEST(Counted, AStackNoWorseThanVStack)
{
  for (auto const& spec : mixed_corpus(300, 53)) {
    auto const g = generate(spec);
    EXPECT_LE(counted_run(CountTag::a_stack, g).report.total(), counted_run(CountTag::v_stack, g).report.total());
  }
}

TEST(Counted, ResultsMatchUncounted)
{
  for (auto const& spec : mixed_corpus(200, 54)) {
    auto const g = generate(spec);
    auto const oracle = oracle_scc(g);
    for (auto t : { CountTag::tarjan_a, CountTag::cycle_a, CountTag::bidi }) {
      auto const run = counted_run(t, g);
      ASSERT_TRUE(run.scc.has_value());
      EXPECT_TRUE(matches_oracle(*run.scc, oracle));
    }
    EXPECT_FALSE(counted_run(CountTag::quick, g).scc.has_value());
  }
}

TEST(Counted, OptionsDoNotChangeResult)
{
  for (auto const& spec : mixed_corpus(100, 55)) {
    auto const g = generate(spec);
    auto const ref = counted_run(CountTag::tarjan_a, g).scc;
    CountOptions o;
    o.encode_leader_bits = true;
    o.numeric_components = true;
    o.engine = EngineKind::v_stack;
    EXPECT_EQ(counted_run(CountTag::tarjan_a, g, o).scc, ref);
  }
}
