#pragma once

// strongcomp command-line front end. run_cli() is the whole program minus
// process plumbing so tests can drive it with string streams.
//
//   strongcomp scc      [FILE] [-a t|c|b] [--engine recursive|v|a] [flags]
//   strongcomp condense [FILE] [-a t|c|b] [--leaders FILE]
//   strongcomp verify   [FILE] --scc FILE
//   strongcomp gen      --family NAME -n N [-m M] [--seed S] [--cycles K]
//   strongcomp count    [FILE] [-a t|c|b|dfs|quick] [--engine v|a] [flags]
//   strongcomp bench    [FILE] [--repeat R]
//
// Exit status: 0 ok, 1 usage, 2 invalid graph, 3 verification failure.

#include <strongcomp/strongcomp.hpp>
#include <strongcomp/testkit.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace strongcomp::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_bad_graph = 2, exit_rejected = 3 };

inline constexpr std::size_t recursion_warning_threshold = 100000;

struct RunFlags {
  std::string algorithm = "t";
  std::string engine = "a";
  bool stop_early = false;
  bool encode_leader_bits = false;
  bool numeric_components = false;
  bool record_lowarcs = false;
  bool counted = false;
};

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_all(std::string const& path, std::istream& in)
{
  if (path == "-") return { std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>() };
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path);
  return { std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>() };
}

inline Graph read_graph(std::string const& path, std::istream& in)
{
  return parse_graph(read_all(path, in));
}

inline EngineKind engine_of(std::string const& name)
{
  auto e = parse_engine(name);
  if (!e) throw UsageError("unknown engine '" + name + "'");
  return *e;
}

inline void warn_depth(Graph const& g, EngineKind e, std::ostream& err)
{
  if (e == EngineKind::recursive && g.vertex_count() > recursion_warning_threshold)
    err << "warning: recursive engine on " << g.vertex_count() << " vertices may exhaust the call stack\n";
}

inline SccResult run_scc(Graph const& g, RunFlags const& f, std::ostream& err)
{
  auto const engine = engine_of(f.engine);
  if (f.counted && engine == EngineKind::recursive) throw UsageError("--counted needs the v or a engine");
  warn_depth(g, engine, err);
  if (f.algorithm != "t" && (f.encode_leader_bits || f.numeric_components || f.record_lowarcs))
    throw UsageError("--encode-leader-bits, --numeric-components and --record-lowarcs apply to -a t only");

  if (f.counted) {
    CountTag tag = f.algorithm == "t" ? CountTag::tarjan_a : f.algorithm == "c" ? CountTag::cycle_a : CountTag::bidi;
    CountOptions o;
    o.engine = engine;
    o.stop_early = f.stop_early;
    o.encode_leader_bits = f.encode_leader_bits;
    o.numeric_components = f.numeric_components;
    auto run = counted_run(tag, g, o);
    err << AccessReport::csv_header << '\n' << run.report.to_csv() << '\n';
    return std::move(*run.scc);
  }
  if (f.algorithm == "t") {
    TarjanOptions o;
    o.engine = engine;
    o.stop_early = f.stop_early;
    o.encode_leader_bits = f.encode_leader_bits;
    o.numeric_components = f.numeric_components;
    o.record_lowarcs = f.record_lowarcs;
    return scc_tarjan(g, o);
  }
  if (f.algorithm == "c") return scc_cycle(g, { engine, f.stop_early });
  if (f.algorithm == "b") {
    BidiOptions o;
    o.engine = engine;
    o.stop_early = f.stop_early;
    return scc_bidirectional(g, nullptr, o);
  }
  throw UsageError("unknown algorithm '" + f.algorithm + "'");
}

} // namespace detail

/// "order=..." then one "leader: v1 v2 ..." line per component.
inline std::string format_scc(SccResult const& scc)
{
  std::string out = "order=";
  out += to_string(scc.order_kind);
  out += '\n';
  for (std::size_t i = 0; i < scc.component_count(); ++i) {
    strongcomp::detail::append_uint(out, scc.component_leader(i));
    out += ':';
    for (auto v : scc.component(i)) {
      out += ' ';
      strongcomp::detail::append_uint(out, v);
    }
    out += '\n';
  }
  return out;
}

/// Inverse of format_scc for a graph with n vertices. Syntax errors throw
/// Error{parse_error}; anything that is not a partition throws
/// Error{invalid_partition}.
inline SccResult parse_scc(std::string_view text, std::size_t n)
{
  std::istringstream in{ std::string(text) };
  std::string line;
  std::size_t line_no = 0;
  std::optional<OrderKind> order;
  std::vector<std::pair<Vertex, std::vector<Vertex>>> comps;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!order) {
      if (line == "order=reverse-topological") order = OrderKind::reverse_topological;
      else if (line == "order=topological") order = OrderKind::topological;
      else throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected order= header", line_no);
      continue;
    }
    auto const colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected \"leader: vertices\"", line_no);
    std::istringstream head(line.substr(0, colon)), body(line.substr(colon + 1));
    std::uint64_t l = 0, v = 0;
    if (!(head >> l)) throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": bad leader", line_no);
    std::vector<Vertex> members;
    while (body >> v) {
      if (v < 1 || v > n) throw Error(ErrorCode::invalid_partition, "vertex " + std::to_string(v) + " out of range");
      members.push_back(static_cast<Vertex>(v));
    }
    if (!body.eof()) throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": bad vertex list", line_no);
    if (l < 1 || l > n) throw Error(ErrorCode::invalid_partition, "leader " + std::to_string(l) + " out of range");
    comps.emplace_back(static_cast<Vertex>(l), std::move(members));
  }
  if (!order) throw Error(ErrorCode::parse_error, "missing order= header");
  SccBuilder b(n, *order, WithinOrder::search_order);
  for (auto const& [l, members] : comps) {
    auto const hits = std::count(members.begin(), members.end(), l);
    if (hits == 0) throw Error(ErrorCode::invalid_partition, "leader " + std::to_string(l) + " not in its component");
    if (hits > 1) throw Error(ErrorCode::invalid_partition, "leader " + std::to_string(l) + " listed twice");
    b.add(l, l);
    for (auto v : members)
      if (v != l) b.add(v, l);
    b.close_component();
  }
  auto scc = std::move(b).take();
  validate_partition(n, scc);
  return scc;
}

inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
{
  CLI::App app{ "Strong components of directed graphs", "strongcomp" };
  app.require_subcommand(1);

  std::string input = "-";
  std::string output;
  RunFlags flags;
  auto add_run_flags = [&](CLI::App* sub, bool with_algorithm_flags) {
    sub->add_option("input", input, "edge-list file, '-' for standard input");
    sub->add_option("-o,--output", output, "output file (default standard output)");
    sub->add_option("--engine", flags.engine, "exploration engine")->check(CLI::IsMember({ "recursive", "v", "a" }));
    if (!with_algorithm_flags) return;
    sub->add_flag("--stop-early", flags.stop_early, "stop once the last component is determined");
  };

  auto* scc = app.add_subcommand("scc", "print the strong components");
  add_run_flags(scc, true);
  scc->add_option("-a,--algorithm", flags.algorithm, "t, c or b")->check(CLI::IsMember({ "t", "c", "b" }));
  scc->add_flag("--encode-leader-bits", flags.encode_leader_bits, "leader bit in the low values (t)");
  scc->add_flag("--numeric-components", flags.numeric_components, "components encoded as leader+n (t)");
  scc->add_flag("--record-lowarcs", flags.record_lowarcs, "record low arcs and tree arcs (t)");
  scc->add_flag("--counted", flags.counted, "also report memory accesses on standard error");

  auto* cond = app.add_subcommand("condense", "print the condensation and its leader map");
  add_run_flags(cond, false);
  cond->add_option("-a,--algorithm", flags.algorithm, "t, c or b")->check(CLI::IsMember({ "t", "c", "b" }));
  std::string leaders_path;
  cond->add_option("--leaders", leaders_path, "write the \"comp leader\" lines here instead");

  auto* ver = app.add_subcommand("verify", "certify a strong components listing");
  ver->add_option("input", input, "edge-list file, '-' for standard input");
  std::string scc_path;
  ver->add_option("--scc", scc_path, "listing in the format printed by scc")->required();

  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string family_name;
  GenSpec spec;
  gen->add_option("--family", family_name, "gnm, dag, cycle-chain, complete, multi-loop, deep-path")->required();
  gen->add_option("-n", spec.n, "vertices")->required();
  gen->add_option("-m", spec.m, "arcs");
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("--cycles", spec.cycles, "cycles (cycle-chain)");
  gen->add_option("-o,--output", output, "output file (default standard output)");

  auto* cnt = app.add_subcommand("count", "count memory accesses");
  add_run_flags(cnt, true);
  cnt->add_option("-a,--algorithm", flags.algorithm, "t, c, b, dfs or quick")
    ->check(CLI::IsMember({ "t", "c", "b", "dfs", "quick" }));
  cnt->add_flag("--encode-leader-bits", flags.encode_leader_bits, "leader bit in the low values (t)");
  cnt->add_flag("--numeric-components", flags.numeric_components, "components encoded as leader+n (t)");

  auto* bench = app.add_subcommand("bench", "time every algorithm and engine");
  bench->add_option("input", input, "edge-list file, '-' for standard input");
  int repeat = 3;
  bench->add_option("--repeat", repeat, "runs per pair")->check(CLI::PositiveNumber);

  std::ofstream file_out;
  auto sink = [&]() -> std::ostream& {
    if (output.empty()) return out;
    file_out.open(output, std::ios::binary);
    if (!file_out) throw detail::UsageError("cannot write " + output);
    return file_out;
  };

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return exit_ok;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (CLI::ParseError const& e) {
    err << "strongcomp: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (scc->parsed()) {
      auto const g = detail::read_graph(input, in);
      sink() << format_scc(detail::run_scc(g, flags, err));
      return exit_ok;
    }
    if (cond->parsed()) {
      auto const g = detail::read_graph(input, in);
      flags.counted = false;
      auto const c = condense(g, detail::run_scc(g, flags, err));
      auto& o = sink();
      o << serialize_graph(c.graph);
      auto const side = serialize_leader_sidecar(c);
      if (!leaders_path.empty()) {
        std::ofstream lf(leaders_path, std::ios::binary);
        if (!lf) throw detail::UsageError("cannot write " + leaders_path);
        lf << side;
      } else {
        // commented so the output still parses as an edge list
        o << "# comp leader\n";
        std::istringstream lines(side);
        for (std::string line; std::getline(lines, line);) o << "# " << line << '\n';
      }
      return exit_ok;
    }
    if (ver->parsed()) {
      auto const g = detail::read_graph(input, in);
      std::string text;
      {
        std::ifstream f(scc_path, std::ios::binary);
        if (!f) throw detail::UsageError("cannot open " + scc_path);
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
      }
      SccResult listed;
      try {
        listed = parse_scc(text, g.vertex_count());
      } catch (Error const& e) {
        if (e.code() != ErrorCode::invalid_partition) throw detail::UsageError(e.what());
        err << "REJECT: " << e.what() << '\n';
        return exit_rejected;
      }
      auto const v = certify_scc(g, listed);
      if (!v) {
        err << "REJECT: " << v.reason << '\n';
        return exit_rejected;
      }
      out << "ACCEPT\n";
      return exit_ok;
    }
    if (gen->parsed()) {
      auto const f = parse_family(family_name);
      if (!f) throw detail::UsageError("unknown family '" + family_name + "'");
      spec.family = *f;
      sink() << serialize_graph(generate(spec));
      return exit_ok;
    }
    if (cnt->parsed()) {
      auto const g = detail::read_graph(input, in);
      auto const engine = detail::engine_of(flags.engine);
      if (engine == EngineKind::recursive) throw detail::UsageError("count needs the v or a engine");
      CountTag tag = CountTag::tarjan_a;
      if (flags.algorithm == "c") tag = CountTag::cycle_a;
      else if (flags.algorithm == "b") tag = CountTag::bidi;
      else if (flags.algorithm == "quick") tag = CountTag::quick;
      else if (flags.algorithm == "dfs") tag = engine == EngineKind::v_stack ? CountTag::v_stack : CountTag::a_stack;
      if (flags.algorithm != "t" && (flags.encode_leader_bits || flags.numeric_components))
        throw detail::UsageError("encoding flags apply to -a t only");
      CountOptions o;
      o.engine = engine;
      o.stop_early = flags.stop_early;
      o.encode_leader_bits = flags.encode_leader_bits;
      o.numeric_components = flags.numeric_components;
      auto& s = sink();
      s << AccessReport::csv_header << '\n' << counted_run(tag, g, o).report.to_csv() << '\n';
      return exit_ok;
    }
    if (bench->parsed()) {
      auto const g = detail::read_graph(input, in);
      out << "algorithm,engine,ms,components,accesses\n";
      for (std::string alg : { "t", "c", "b" })
        for (auto e : all_engines) {
          if (e == EngineKind::recursive && g.vertex_count() > recursion_warning_threshold) {
            err << "skipping " << alg << "/recursive: " << g.vertex_count() << " vertices\n";
            continue;
          }
          RunFlags f;
          f.algorithm = alg;
          f.engine = std::string(to_string(e));
          double best = 0;
          std::size_t comps = 0;
          for (int r = 0; r < repeat; ++r) {
            auto const t0 = std::chrono::steady_clock::now();
            comps = detail::run_scc(g, f, err).component_count();
            std::chrono::duration<double, std::milli> const dt = std::chrono::steady_clock::now() - t0;
            if (r == 0 || dt.count() < best) best = dt.count();
          }
          std::string accesses = "-";
          if (e != EngineKind::recursive) {
            CountTag const tag = alg == "t" ? CountTag::tarjan_a : alg == "c" ? CountTag::cycle_a : CountTag::bidi;
            CountOptions o;
            o.engine = e;
            accesses = std::to_string(counted_run(tag, g, o).report.total());
          }
          char ms[32];
          std::snprintf(ms, sizeof ms, "%.3f", best);
          out << alg << ',' << to_string(e) << ',' << ms << ',' << comps << ',' << accesses << '\n';
        }
      return exit_ok;
    }
  } catch (detail::UsageError const& e) {
    err << "strongcomp: " << e.what() << '\n';
    return exit_usage;
  } catch (Error const& e) {
    err << "strongcomp: " << e.what() << '\n';
    switch (e.code()) {
    case ErrorCode::parse_error:
    case ErrorCode::out_of_range: return exit_bad_graph;
    default: return exit_usage;
    }
  }
  return exit_usage;
}

} // namespace strongcomp::cli
