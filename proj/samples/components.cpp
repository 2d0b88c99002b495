// Strong components of a small call graph with all three algorithms, plus
// the condensation.
#include <strongcomp/strongcomp.hpp>

#include <iostream>

using namespace strongcomp;

static void show(char const* name, SccResult const& r)
{
  std::cout << name << " (" << to_string(r.order_kind) << ")\n";
  for (std::size_t i = 0; i < r.component_count(); ++i) {
    std::cout << "  " << r.component_leader(i) << ":";
    for (auto v : r.component(i)) std::cout << ' ' << v;
    std::cout << '\n';
  }
}

int main()
{
  // 1 main, 2 parse, 3 parse_expr, 4 parse_term, 5 eval, 6 apply, 7 log
  auto const g = build_graph(7, {
    { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 3 }, { 1, 5 }, { 5, 6 }, { 6, 5 }, { 3, 7 }, { 6, 7 }, { 7, 7 },
  });

  show("single pass, low values", scc_tarjan(g));
  show("single pass, cycle merging", scc_cycle(g));
  show("two passes", scc_bidirectional(g));

  auto const c = condense(g, scc_tarjan(g));
  std::cout << "condensation\n" << serialize_graph(c.graph);
  for (std::size_t i = 1; i < c.leader.size(); ++i) std::cout << "  node " << i << " = leader " << c.leader[i] << '\n';

  auto const v = certify_scc(g, scc_cycle(g));
  std::cout << (v ? "certified" : "rejected: " + v.reason) << '\n';
}
