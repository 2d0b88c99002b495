#include <strongcomp/bidirectional.hpp>
#include <strongcomp/tarjan.hpp>
#include <strongcomp/testkit.hpp>
#include <strongcomp/trace.hpp>

#include <gtest/gtest.h>

using namespace strongcomp;

namespace {

std::vector<std::vector<Vertex>> lists(SccResult const& r)
{
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < r.component_count(); ++i) out.emplace_back(r.component(i).begin(), r.component(i).end());
  return out;
}

Graph const two_pairs = build_graph(4, { { 1, 2 }, { 2, 1 }, { 3, 4 }, { 4, 3 }, { 2, 3 } });

} // namespace

TEST(Bidirectional, TopologicalEmission)
{
  auto const r = scc_bidirectional(two_pairs);
  EXPECT_EQ(r.order_kind, OrderKind::topological);
  EXPECT_EQ(r.within_order, WithinOrder::search_order);
  EXPECT_EQ(lists(r), (std::vector<std::vector<Vertex>>{ { 1, 2 }, { 3, 4 } }));
}

TEST(Bidirectional, ReversePostorder)
{
  auto const g = build_graph(3, { { 1, 2 }, { 1, 3 } });
  EXPECT_EQ(forward_reverse_postorder(g), (std::vector<Vertex>{ 1, 3, 2 }));
  auto const st = compute_pre_post(g, EngineKind::a_stack);
  auto const rp = forward_reverse_postorder(g);
  for (std::size_t i = 1; i < rp.size(); ++i) EXPECT_GT(st.post[rp[i - 1]], st.post[rp[i]]);
}

TEST(Bidirectional, ReversedEmissionMatchesTarjanOrder)
{
  for (auto const& spec : mixed_corpus(400, 31)) {
    auto const g = generate(spec);
    auto const b = scc_bidirectional(g);
    ASSERT_TRUE(matches_oracle(b, oracle_scc(g)));
    // both emissions are valid topological orders of the same condensation
    auto const idx = b.component_index();
    for (Arc a = 1; a <= g.arc_count(); ++a) EXPECT_LE(idx[g.tail(a)], idx[g.tip(a)]);
    EXPECT_TRUE(same_partition(b, scc_tarjan(g)));
  }
}

TEST(Bidirectional, EveryOptionCombination)
{
  for (auto const& spec : mixed_corpus(300, 32)) {
    auto const g = generate(spec);
    auto const rev = reverse_graph(g);
    auto const ref = scc_bidirectional(g, &rev);
    for (auto e : all_engines)
      for (bool stop : { false, true })
        for (auto back : { BackwardSearch::quick, BackwardSearch::depth_first }) {
          BidiOptions o{ e, stop, back };
          auto const r = scc_bidirectional(g, &rev, o);
          EXPECT_TRUE(same_partition(r, ref));
          EXPECT_EQ(emission_leaders(r), emission_leaders(ref));
        }
  }
}

TEST(Bidirectional, StopEarlyForwardPassStillOrdersComponents)
{
  for (auto const& spec : mixed_corpus(300, 33)) {
    auto const g = generate(spec);
    auto const a = forward_reverse_postorder(g, EngineKind::a_stack, {}, true);
    EXPECT_EQ(a, forward_reverse_postorder(g));
  }
}

TEST(Bidirectional, MismatchedReverseRejected)
{
  auto const bad = build_graph(4, {});
  try {
    scc_bidirectional(two_pairs, &bad);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::out_of_range);
  }
}

TEST(Bidirectional, IsolatedVertexCounts)
{
  for (std::size_t n : { 1u, 5u, 40u }) {
    auto const g = build_graph(n, {});
    AccessCounter mem;
    scc_bidirectional(g, reverse_graph(g), {}, {}, mem);
    EXPECT_EQ(mem.reads, 6 * n);
    EXPECT_EQ(mem.writes, 5 * n);
  }
}

TEST(Bidirectional, ForwardStatsCountStarts)
{
  AccessCounter mem;
  ExploreStats st;
  scc_bidirectional(two_pairs, reverse_graph(two_pairs), {}, {}, mem, &st);
  EXPECT_EQ(st.starts, 1u);
}
