// Memory accesses of every counted run against its linear bound, on a few
// generated graphs.
#include <strongcomp/instrumentation.hpp>
#include <strongcomp/testkit.hpp>

#include <iostream>

using namespace strongcomp;

int main()
{
  GenSpec const specs[] = {
    { Family::gnm_random, 1000, 4000, 7 },
    { Family::dag, 1000, 3000, 8 },
    { Family::cycle_chain, 1000, 3000, 9, 20 },
    { Family::complete, 40, 0, 10 },
    { Family::deep_path, 10000, 0, 11 },
  };
  std::cout << "family," << AccessReport::csv_header << ",ratio\n";
  for (auto const& s : specs) {
    auto const g = generate(s);
    for (auto t : all_count_tags) {
      auto const r = counted_run(t, g).report;
      double const ratio = r.bound() ? static_cast<double>(r.total()) / static_cast<double>(r.bound()) : 0.0;
      std::cout << to_string(s.family) << ',' << r.to_csv() << ',' << ratio << '\n';
    }
  }
}
