#include <strongcomp/tarjan.hpp>
#include <strongcomp/testkit.hpp>
#include <strongcomp/trace.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace strongcomp;

TEST(Oracle, SmallGraphs)
{
  auto const g = build_graph(5, { { 1, 2 }, { 2, 1 }, { 3, 4 }, { 4, 5 }, { 5, 3 }, { 2, 3 } });
  EXPECT_EQ(oracle_scc(g).id, (std::vector<Vertex>{ 0, 1, 1, 3, 3, 3 }));
  auto const r = reachability(g);
  EXPECT_TRUE(r[1][5]);
  EXPECT_FALSE(r[5][1]);
  EXPECT_TRUE(r[4][4]);
  EXPECT_EQ(oracle_scc(build_graph(0, {})).id, (std::vector<Vertex>{ 0 }));
}

TEST(Oracle, TooLarge)
{
  try {
    oracle_scc(build_graph(300, {}));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::too_large);
  }
  EXPECT_NO_THROW(oracle_scc(build_graph(300, {}), 300));
}

TEST(Oracle, DetectsWrongPartition)
{
  auto const g = build_graph(2, { { 1, 2 } });
  auto scc = scc_tarjan(g);
  EXPECT_TRUE(matches_oracle(scc, oracle_scc(g)));
  EXPECT_FALSE(matches_oracle(scc, oracle_scc(build_graph(2, { { 1, 2 }, { 2, 1 } }))));
}

TEST(Generate, DeepPath)
{
  auto const g = generate({ Family::deep_path, 5, 0, 1 });
  EXPECT_EQ(g.arc_list(), (std::vector<ArcEnds>{ { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 } }));
}

TEST(Generate, CycleChainComponents)
{
  GenSpec s{ Family::cycle_chain, 6, 0, 3, 2 };
  auto const g = generate(s);
  EXPECT_EQ(oracle_scc(g).id, (std::vector<Vertex>{ 0, 1, 1, 1, 4, 4, 4 }));
  s.m = 30;
  EXPECT_EQ(oracle_scc(generate(s)).id, (std::vector<Vertex>{ 0, 1, 1, 1, 4, 4, 4 }));
}

TEST(Generate, FamilyShapes)
{
  auto const dag = generate({ Family::dag, 20, 60, 4 });
  EXPECT_EQ(dag.arc_count(), 60u);
  EXPECT_EQ(scc_tarjan(dag).component_count(), 20u);

  auto const k = generate({ Family::complete, 6, 0, 5 });
  EXPECT_EQ(k.arc_count(), 30u);
  EXPECT_EQ(scc_tarjan(k).component_count(), 1u);

  auto const ml = generate({ Family::multi_loop, 10, 12, 6 });
  auto arcs = ml.arc_list();
  EXPECT_TRUE(std::any_of(arcs.begin(), arcs.end(), [](ArcEnds e) { return e.tail == e.head; }));
  std::set<std::pair<Vertex, Vertex>> distinct;
  for (auto e : arcs) distinct.insert({ e.tail, e.head });
  EXPECT_LT(distinct.size(), arcs.size());

  auto const gnm = generate({ Family::gnm_random, 8, 17, 7 });
  EXPECT_EQ(gnm.vertex_count(), 8u);
  EXPECT_EQ(gnm.arc_count(), 17u);
}

TEST(Generate, Deterministic)
{
  for (auto const& spec : mixed_corpus(60, 61)) EXPECT_EQ(generate(spec).arc_list(), generate(spec).arc_list());
  EXPECT_NE(generate({ Family::gnm_random, 20, 40, 1 }).arc_list(), generate({ Family::gnm_random, 20, 40, 2 }).arc_list());
}

TEST(Generate, BadSpecs)
{
  for (GenSpec s : { GenSpec{ Family::gnm_random, 0, 3, 1 },
                     GenSpec{ Family::dag, 1, 1, 1 },
                     GenSpec{ Family::cycle_chain, 3, 0, 1, 4 },
                     GenSpec{ Family::cycle_chain, 3, 0, 1, 0 },
                     GenSpec{ Family::multi_loop, 0, 1, 1 } }) {
    try {
      generate(s);
      ADD_FAILURE() << to_string(s.family);
    } catch (Error const& e) {
      EXPECT_EQ(e.code(), ErrorCode::bad_spec);
    }
  }
}

TEST(Generate, FamilyNames)
{
  for (auto f : all_families) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_EQ(parse_family("cycle-chain"), Family::cycle_chain);
  EXPECT_FALSE(parse_family("tree").has_value());
}

TEST(Corpus, SizesAndLimits)
{
  auto const all = full_corpus(50);
  EXPECT_EQ(all.size(), 300u);
  for (auto const& s : all) {
    auto const g = generate(s);
    EXPECT_LE(g.vertex_count(), 64u);
    EXPECT_LE(g.arc_count(), 512u);
  }
  auto const mixed = mixed_corpus(13);
  ASSERT_EQ(mixed.size(), 13u);
  EXPECT_EQ(mixed[0].family, Family::gnm_random);
  EXPECT_EQ(mixed[5].family, Family::deep_path);
  EXPECT_EQ(mixed[6].family, Family::gnm_random);
}

TEST(TraceCheck, AcceptsRealTraces)
{
  for (auto const& spec : mixed_corpus(200, 62))
    for (auto e : all_engines) {
      auto const g = generate(spec);
      auto const d = check_trace(trace_exploration(g, e), g);
      EXPECT_TRUE(d.empty()) << d.front();
    }
}

TEST(TraceCheck, RejectsDamagedTraces)
{
  auto const g = build_graph(3, { { 1, 2 }, { 2, 3 }, { 3, 1 }, { 1, 3 } });
  auto const trace = trace_exploration(g, EngineKind::a_stack);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    auto t = trace;
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
    if (t.empty() || trace[i].kind == EventKind::search_start) continue;
    EXPECT_FALSE(check_trace(t, g).empty()) << "dropped event " << i;
  }
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    auto t = trace;
    std::swap(t[i], t[i + 1]);
    if (t[i].kind == t[i + 1].kind && t[i].v == t[i + 1].v && t[i].a == t[i + 1].a) continue;
    EXPECT_FALSE(check_trace(t, g).empty()) << "swapped events " << i;
  }
}

TEST(Mutate, ChangesTheResult)
{
  std::mt19937_64 rng(63);
  for (auto const& spec : mixed_corpus(200, 63)) {
    auto const g = generate(spec);
    auto const scc = scc_tarjan(g);
    for (auto kind : all_mutations) {
      auto const m = mutate(scc, kind, rng);
      if (!m) continue;
      EXPECT_NO_THROW(validate_partition(g.vertex_count(), *m));
      if (kind == MutationKind::leader_swap)
        EXPECT_TRUE(same_partition(*m, scc) && m->leader != scc.leader);
      else
        EXPECT_FALSE(same_partition(*m, scc));
    }
  }
}

TEST(Mutate, NoRoomGivesNothing)
{
  std::mt19937_64 rng(1);
  auto const single = scc_tarjan(build_graph(1, {}));
  for (auto kind : all_mutations) EXPECT_FALSE(mutate(single, kind, rng).has_value());
}

TEST(CycleChecker, CleanRunsOnCorpus)
{
  std::size_t events = 0;
  for (auto const& spec : mixed_corpus(120, 64)) {
    auto const g = generate(spec);
    auto const rep = check_cycle_invariants(g);
    EXPECT_TRUE(rep.violations.empty()) << rep.violations.front();
    EXPECT_TRUE(matches_oracle(rep.scc, oracle_scc(g)));
    events += rep.events;
  }
  EXPECT_GT(events, 1000u);
}
