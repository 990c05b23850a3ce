#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blmp/engine.hpp"
#include "blmp/heuristics.hpp"
#include "blmp/io.hpp"
#include "blmp/model.hpp"
#include "blmp/oracle.hpp"
#include "blmp/replay_fixture.hpp"

namespace {

using namespace blmp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BLMP_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

// truncated two-decimal display of an exact fraction
std::string format_average(long long num, long long den) {
  long long t = 100 * num / den;
  std::string frac = std::to_string(t % 100);
  if (frac.size() < 2) frac = "0" + frac;
  return std::to_string(t / 100) + "." + frac;
}

struct RunFlags {
  std::string algo = "alg2";
  std::string instance;
  std::string out_placement;
  std::string report_path;
  std::string script_path;
  std::uint64_t seed = default_seed();
  bool seed_set = false;
  int workers = 1;
  std::optional<double> rounds;
  std::optional<double> time_limit;
  double pr = 0.0;
  long long max_trials1 = 20, max_trials2 = 40000;
  long long max_cost = 160, max_cost1 = 10, max_cost2 = 10;
  long long winlength1 = 1120, winlength2 = 320;
  double checkpoint_every = 0;
};

void add_search_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--seed", f.seed, "master seed (falls back to BLMP_SEED, then 0)");
  cmd->add_option("--workers", f.workers, "logical worker count");
  cmd->add_option("--rounds", [&f](const std::vector<std::string>& v) {
    f.rounds = std::stod(v.front());
    return true;
  }, "round budget");
  cmd->add_option("--time-limit", [&f](const std::vector<std::string>& v) {
    f.time_limit = std::stod(v.front());
    return true;
  }, "wall-clock budget in seconds");
  cmd->add_option("--pr", f.pr, "uphill acceptance probability (ls, ls-par)");
  cmd->add_option("--max-trials1", f.max_trials1, "trials before uphill moves are considered");
  cmd->add_option("--max-trials2", f.max_trials2, "trial cap per round");
  cmd->add_option("--max-cost", f.max_cost, "constant uphill gate (alg2)");
  cmd->add_option("--max-cost1", f.max_cost1, "uphill bonus while the window is open");
  cmd->add_option("--max-cost2", f.max_cost2, "allowed excess over the best cost");
  cmd->add_option("--winlength1", f.winlength1, "rounds until the uphill bonus opens");
  cmd->add_option("--winlength2", f.winlength2, "rounds until the uphill bonus closes");
  cmd->add_option("--checkpoint-every", f.checkpoint_every,
                  "emit intermediate best costs every N rounds/seconds");
}

RoundBudget make_budget(const RunFlags& f) {
  if (f.rounds && f.time_limit)
    throw CLI::ValidationError("--rounds and --time-limit are mutually exclusive");
  if (f.time_limit) return {RoundBudget::Kind::WallClockSeconds, *f.time_limit};
  return {RoundBudget::Kind::Rounds, f.rounds.value_or(1000)};
}

SearchParams make_search_params(const RunFlags& f) {
  SearchParams p;
  p.workers = f.workers;
  p.budget = make_budget(f);
  p.pr = f.pr;
  p.max_trials1 = f.max_trials1;
  p.max_trials2 = f.max_trials2;
  p.max_cost = f.max_cost;
  p.max_cost1 = f.max_cost1;
  p.max_cost2 = f.max_cost2;
  p.winlength1 = f.winlength1;
  p.winlength2 = f.winlength2;
  p.seed = f.seed;
  p.checkpoint_every = f.checkpoint_every;
  return p;
}

SelectionScript load_script(const std::string& path, const ProbeSet& sp) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open script file '" + path + "'", 0);
  nlohmann::json j;
  in >> j;
  SelectionScript script;
  if (j.contains("initial")) {
    Placement pl;
    pl.dim = sp.dim;
    for (const auto& row : j["initial"])
      for (const auto& idx : row) pl.cells.push_back(idx.get<int>());
    script.initial = std::move(pl);
  }
  for (const auto& pair : j.at("pairs")) {
    Location a{pair.at(0).at(0).get<int>(), pair.at(0).at(1).get<int>()};
    Location b{pair.at(1).at(0).get<int>(), pair.at(1).at(1).get<int>()};
    script.pairs.emplace_back(a, b);
  }
  if (j.contains("sources"))
    for (const auto& s : j["sources"]) script.sources.push_back(s.get<int>());
  return script;
}

void emit_report(const RunFlags& f, const RunReport& report) {
  for (const Checkpoint& cp : report.checkpoints)
    std::cout << "# checkpoint " << cp.at << " best_cost=" << cp.best_cost << '\n';
  std::cout << csv_header() << '\n' << csv_row(report) << '\n';
  if (!f.report_path.empty()) {
    bool fresh = !std::filesystem::exists(f.report_path) ||
                 std::filesystem::file_size(f.report_path) == 0;
    std::ofstream out(f.report_path, std::ios::app);
    if (fresh) out << csv_header() << '\n';
    out << csv_row(report) << '\n';
  }
}

struct RunOutcome {
  Placement best;
  RunReport report;
};

RunOutcome run_one(const std::string& algo, const ProbeSet& sp, const RunFlags& f,
                   SelectionScript* script) {
  if (algo == "epitaxial") {
    Placement pl = epitaxial_place(sp, f.seed);
    RunReport report;
    report.algorithm = "epitaxial";
    report.workers = 1;
    report.seed = f.seed;
    report.budget = {RoundBudget::Kind::Rounds, 1};
    report.rounds_executed = 1;
    report.best_cost = report.final_cost = total_cost(sp, pl);
    return {std::move(pl), std::move(report)};
  }
  if (algo == "ls") {
    LsParams p;
    p.budget = make_budget(f);
    p.pr = f.pr;
    p.seed = f.seed;
    p.checkpoint_every = f.checkpoint_every;
    LsResult r = ls_run(sp, p);
    return {std::move(r.best), std::move(r.report)};
  }
  SearchParams p = make_search_params(f);
  SearchResult r;
  if (algo == "ls-par") {
    r = ls_par_run(sp, p);
  } else if (algo == "alg1") {
    r = alg1_run(sp, p, script);
  } else if (algo == "alg2") {
    r = alg2_run(sp, p, script);
  } else {
    throw CLI::ValidationError("unknown algorithm '" + algo + "'");
  }
  return {std::move(r.best), std::move(r.report)};
}

void print_replay_trace(const SearchResult& result, const ProbeSet& sp,
                        const Placement& initial) {
  long long initial_cost = total_cost(sp, initial);
  std::vector<long long> costs{initial_cost};
  std::vector<std::string> averages{format_average(initial_cost, sp.pair_count())};
  for (size_t r = 0; r < result.report.trace.size(); ++r) {
    const RoundTrace& rt = result.report.trace[r];
    for (size_t t = 0; t < rt.trials.size(); ++t) {
      std::cout << "round " << (r + 1) << " trial " << (t + 1) << ":";
      for (const auto& e : rt.trials[t].evals)
        std::cout << " P" << e.worker << " localcost=" << e.localcost
                  << " newlocalcost=" << e.newlocalcost << ";";
      std::cout << '\n';
    }
    std::cout << "round " << (r + 1) << " end: COST=" << rt.cost_after
              << " average=" << format_average(rt.avg_num, rt.avg_den)
              << " bestCOST=" << rt.best_cost_after << '\n';
    costs.push_back(rt.cost_after);
    averages.push_back(format_average(rt.avg_num, rt.avg_den));
  }
  std::cout << "COST trajectory:";
  for (size_t i = 0; i < costs.size(); ++i) std::cout << (i ? " -> " : " ") << costs[i];
  std::cout << '\n' << "average trajectory:";
  for (size_t i = 0; i < averages.size(); ++i) std::cout << (i ? " -> " : " ") << averages[i];
  std::cout << '\n' << "bestCOST=" << result.best_cost << '\n';
}

int dispatch(CLI::App& app, int argc, char** argv) {
  // gen
  auto* gen = app.add_subcommand("gen", "generate a random probe set");
  int gen_dim = 8, gen_len = 25;
  std::uint64_t gen_seed = default_seed();
  std::string gen_out;
  gen->add_option("--dim", gen_dim, "grid side")->required();
  gen->add_option("--probelength", gen_len, "probe length");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("-o,--out", gen_out, "output probes file")->required();

  // run
  auto* run = app.add_subcommand("run", "run one algorithm on one instance");
  RunFlags rf;
  run->add_option("--algo", rf.algo, "epitaxial|ls|ls-par|alg1|alg2")->required();
  run->add_option("--instance", rf.instance, "probes file")->required();
  run->add_option("-o,--out", rf.out_placement, "write the best placement here");
  run->add_option("--report", rf.report_path, "append the CSV row to this file");
  run->add_option("--script", rf.script_path, "scripted selections (alg1/alg2 replay)");
  add_search_flags(run, rf);

  // cost
  auto* cost = app.add_subcommand("cost", "score a placement file");
  std::string cost_instance, cost_placement;
  cost->add_option("--instance", cost_instance, "probes file")->required();
  cost->add_option("--placement", cost_placement, "placement file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force optimum (dim <= 3)");
  std::string oracle_instance, oracle_out;
  bool oracle_no_prune = false;
  oracle->add_option("--instance", oracle_instance, "probes file")->required();
  oracle->add_option("-o,--out", oracle_out, "write a witness placement here");
  oracle->add_flag("--no-prune", oracle_no_prune, "disable symmetry pruning");

  // verify
  auto* verify = app.add_subcommand("verify", "incremental-vs-recompute fuzz");
  std::string verify_instance;
  std::uint64_t verify_seed = default_seed();
  long long verify_swaps = 10000;
  verify->add_option("--instance", verify_instance, "probes file")->required();
  verify->add_option("--seed", verify_seed, "seed");
  verify->add_option("--swaps", verify_swaps, "number of random swaps");

  // compare
  auto* compare = app.add_subcommand("compare", "run several algorithms on one instance");
  RunFlags cf;
  std::string compare_algos = "epitaxial,ls,ls-par,alg1,alg2";
  compare->add_option("--algos", compare_algos, "comma-separated algorithm list");
  compare->add_option("--instance", cf.instance, "probes file")->required();
  compare->add_option("-o,--out", cf.out_placement, "placement file prefix");
  compare->add_option("--report", cf.report_path, "append CSV rows to this file");
  add_search_flags(compare, cf);

  // replay
  auto* replay = app.add_subcommand("replay", "run the bundled scripted walkthrough");

  app.require_subcommand(1);
  app.parse(argc, argv);

  if (gen->parsed()) {
    ProbeSet sp = generate_probeset(gen_dim, gen_len, gen_seed);
    write_probes_file(sp, gen_out);
    std::cout << "wrote " << sp.count() << " probes to " << gen_out << '\n';
    return kExitOk;
  }

  if (run->parsed()) {
    ProbeSet sp = read_probes_file(rf.instance);
    SelectionScript script;
    bool has_script = !rf.script_path.empty();
    if (has_script) script = load_script(rf.script_path, sp);
    RunOutcome out = run_one(rf.algo, sp, rf, has_script ? &script : nullptr);
    out.report.instance = rf.instance;
    if (!rf.out_placement.empty()) write_placement_file(out.best, rf.out_placement);
    emit_report(rf, out.report);
    return kExitOk;
  }

  if (cost->parsed()) {
    ProbeSet sp = read_probes_file(cost_instance);
    Placement pl = read_placement_file(cost_placement, sp);
    std::cout << total_cost(sp, pl) << '\n';
    return kExitOk;
  }

  if (oracle->parsed()) {
    ProbeSet sp = read_probes_file(oracle_instance);
    OracleResult r = brute_force_optimum(sp, !oracle_no_prune);
    std::cout << r.optimum_cost << '\n';
    if (!oracle_out.empty()) write_placement_file(r.witness, oracle_out);
    return kExitOk;
  }

  if (verify->parsed()) {
    ProbeSet sp = read_probes_file(verify_instance);
    IncrementalReport r = verify_incremental(sp, verify_seed, verify_swaps);
    if (r.passed) {
      std::cout << "pass: " << r.swaps_done << " swaps, maintained cost matches recompute\n";
      return kExitOk;
    }
    std::cout << "FAIL at swap " << r.divergence_step << ": maintained " << r.maintained_cost
              << " != recomputed " << r.recomputed_cost << '\n';
    return kExitVerify;
  }

  if (compare->parsed()) {
    ProbeSet sp = read_probes_file(cf.instance);
    std::cout << csv_header() << '\n';
    std::stringstream algos(compare_algos);
    std::string algo;
    while (std::getline(algos, algo, ',')) {
      RunOutcome out = run_one(algo, sp, cf, nullptr);
      out.report.instance = cf.instance;
      if (!cf.out_placement.empty())
        write_placement_file(out.best, cf.out_placement + algo + ".placement");
      std::cout << csv_row(out.report) << '\n';
      if (!cf.report_path.empty()) {
        bool fresh = !std::filesystem::exists(cf.report_path) ||
                     std::filesystem::file_size(cf.report_path) == 0;
        std::ofstream rep(cf.report_path, std::ios::app);
        if (fresh) rep << csv_header() << '\n';
        rep << csv_row(out.report) << '\n';
      }
    }
    return kExitOk;
  }

  if (replay->parsed()) {
    SearchResult result = run_replay();
    print_replay_trace(result, replay_probeset(), replay_initial_placement());
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"border-length minimization toolkit for probe placement"};
  try {
    return dispatch(app, argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const blmp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const blmp::ReplayError& e) {
    std::cerr << "replay error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}
