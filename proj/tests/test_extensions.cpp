#include <strongcomp/bidirectional.hpp>
#include <strongcomp/cycle.hpp>
#include <strongcomp/extensions.hpp>
#include <strongcomp/tarjan.hpp>
#include <strongcomp/testkit.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace strongcomp;

namespace {

Graph const triangle = build_graph(3, { { 1, 2 }, { 2, 3 }, { 3, 1 } });
Graph const two_pairs = build_graph(4, { { 1, 2 }, { 2, 1 }, { 3, 4 }, { 4, 3 }, { 2, 3 }, { 1, 4 } });

TarjanRun recorded(Graph const& g)
{
  TarjanOptions o;
  o.record_lowarcs = true;
  return tarjan_run(g, o);
}

} // namespace

TEST(Condense, TwoPairsCollapseToOneArc)
{
  auto const c = condense(two_pairs, scc_tarjan(two_pairs));
  EXPECT_EQ(c.graph.vertex_count(), 2u);
  EXPECT_EQ(c.graph.arc_list(), (std::vector<ArcEnds>{ { 2, 1 } }));
  EXPECT_EQ(c.leader, (std::vector<Vertex>{ 0, 3, 1 }));
  EXPECT_EQ(c.component_of, (std::vector<Vertex>{ 0, 2, 2, 1, 1 }));
  EXPECT_EQ(serialize_leader_sidecar(c), "1 3\n2 1\n");
}

TEST(Condense, TopologicalInputGivesTheSameCondensation)
{
  for (auto const& spec : mixed_corpus(200, 41)) {
    auto const g = generate(spec);
    auto const a = condense(g, scc_tarjan(g));
    auto const b = condense(g, scc_bidirectional(g));
    auto sorted = [](Graph const& h) {
      std::set<std::pair<Vertex, Vertex>> out;
      for (auto const& e : h.arc_list()) out.insert({ e.tail, e.head });
      return out;
    };
    EXPECT_EQ(sorted(a.graph), sorted(b.graph));
    EXPECT_EQ(a.graph.arc_count(), b.graph.arc_count());
    EXPECT_EQ(a.leader, b.leader);
  }
}

TEST(Condense, AcyclicAndDuplicateFree)
{
  for (auto const& spec : mixed_corpus(300, 42)) {
    auto const g = generate(spec);
    auto const scc = scc_tarjan(g);
    auto const c = condense(g, scc);
    auto const arcs = c.graph.arc_list();
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto const& e : arcs) {
      EXPECT_GT(e.tail, e.head);
      EXPECT_TRUE(seen.insert({ e.tail, e.head }).second);
    }
    // exactly the pairs of distinct adjacent components
    std::set<std::pair<Vertex, Vertex>> want;
    for (Arc a = 1; a <= g.arc_count(); ++a) {
      auto const x = c.component_of[g.tail(a)], y = c.component_of[g.tip(a)];
      if (x != y) want.insert({ x, y });
    }
    EXPECT_EQ(seen, want);
    EXPECT_EQ(scc_tarjan(c.graph).component_count(), c.graph.vertex_count());
  }
}

TEST(Condense, RejectsPartitionOfAnotherGraph)
{
  EXPECT_THROW(condense(two_pairs, scc_tarjan(triangle)), Error);
}

TEST(Certificates, TriangleTrees)
{
  auto const run = recorded(triangle);
  auto const in = build_in_trees(run);
  EXPECT_EQ(in.lowarc, (std::vector<Arc>{ no_arc, no_arc, 2, 3 }));
  auto const out = build_out_trees(triangle, run.tree_arcs, run.scc);
  ASSERT_EQ(out.arcs.size(), 1u);
  EXPECT_EQ(out.arcs[0], (std::vector<Arc>{ 1, 2 }));
  EXPECT_TRUE(verify_scc(triangle, run.scc, in, out));
}

TEST(Certificates, InTreesNeedRecordedRun)
{
  try {
    build_in_trees(tarjan_run(triangle));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported);
  }
}

TEST(Certificates, EveryAlgorithmAccepted)
{
  for (auto const& spec : mixed_corpus(300, 43)) {
    auto const g = generate(spec);
    EXPECT_TRUE(certify_scc(g, scc_tarjan(g)));
    EXPECT_TRUE(certify_scc(g, scc_cycle(g)));
    auto const v = certify_scc(g, scc_bidirectional(g));
    EXPECT_TRUE(v) << v.reason;
  }
}

TEST(Certificates, StopEarlyRunsStillCertify)
{
  for (auto const& spec : mixed_corpus(300, 44))
    for (bool enc : { false, true }) {
      auto const g = generate(spec);
      TarjanOptions o;
      o.record_lowarcs = true;
      o.stop_early = true;
      o.encode_leader_bits = enc;
      auto const run = tarjan_run(g, o);
      auto const v = verify_scc(g, run.scc, build_in_trees(run), build_out_trees(g, run.tree_arcs, run.scc));
      EXPECT_TRUE(v) << v.reason;
    }
}

TEST(Certificates, MutationsRejected)
{
  std::mt19937_64 rng(45);
  std::size_t tried = 0;
  for (auto const& spec : mixed_corpus(300, 45)) {
    auto const g = generate(spec);
    auto const scc = scc_tarjan(g);
    for (auto kind : all_mutations) {
      auto const bad = mutate(scc, kind, rng);
      if (!bad) continue;
      ++tried;
      EXPECT_FALSE(certify_scc(g, *bad)) << to_string(kind);
    }
  }
  EXPECT_GT(tried, 100u);
}

TEST(Certificates, MergedListingRejectedWithReason)
{
  auto scc = scc_tarjan(two_pairs);
  for (auto& l : scc.leader) l = l == 3 ? 1 : l;
  scc.offsets = { 0, 4 };
  auto const v = certify_scc(two_pairs, scc);
  EXPECT_FALSE(v);
  EXPECT_FALSE(v.reason.empty());
}

TEST(Certificates, WrongOrderRejected)
{
  auto scc = scc_tarjan(two_pairs);
  auto const rev = reversed_emission(scc);
  auto relabeled = rev;
  relabeled.order_kind = OrderKind::reverse_topological;
  EXPECT_FALSE(certify_scc(two_pairs, relabeled));
  EXPECT_TRUE(certify_scc(two_pairs, rev));
}
