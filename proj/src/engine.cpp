#include "blmp/engine.hpp"

#include <algorithm>
#include <chrono>

namespace blmp {

void SearchParams::validate() const {
  if (workers < 1) throw std::invalid_argument("SearchParams: workers must be >= 1");
  if (budget.amount <= 0) throw std::invalid_argument("SearchParams: budget amount must be > 0");
  if (pr < 0.0 || pr > 1.0) throw std::invalid_argument("SearchParams: pr must be in [0,1]");
  if (max_trials1 < 1 || max_trials2 < 1)
    throw std::invalid_argument("SearchParams: MaxTrials must be positive");
  if (max_trials1 > max_trials2)
    throw std::invalid_argument("SearchParams: MaxTrials1 must be <= MaxTrials2");
  if (max_cost < 0 || max_cost1 < 0 || max_cost2 < 0)
    throw std::invalid_argument("SearchParams: MaxCost values must be non-negative");
  if (winlength1 < 1 || winlength2 < 1)
    throw std::invalid_argument("SearchParams: winlengths must be positive");
}

std::pair<Location, Location> SelectionScript::next_pair(int worker) {
  if (pair_cursor_ >= pairs.size())
    throw ReplayError("selection script exhausted: no location pair left for worker P" +
                      std::to_string(worker) + " (consumed " + std::to_string(pair_cursor_) +
                      " pairs)");
  return pairs[pair_cursor_++];
}

int SelectionScript::next_source(const std::vector<int>& candidates) {
  if (source_cursor_ >= sources.size())
    throw ReplayError("selection script exhausted: no source choice left (consumed " +
                      std::to_string(source_cursor_) + " choices)");
  int s = sources[source_cursor_++];
  if (std::find(candidates.begin(), candidates.end(), s) == candidates.end())
    throw ReplayError("scripted source P" + std::to_string(s) +
                      " is not among the successful workers at choice " +
                      std::to_string(source_cursor_));
  return s;
}

SyncDecision select_source(const std::vector<int>& candidates, Rng& coordinator_rng) {
  if (candidates.empty()) return {};
  if (candidates.size() == 1) return {candidates.front()};
  return {candidates[static_cast<size_t>(coordinator_rng.below(candidates.size()))]};
}

namespace {

struct Worker {
  int id = 0;
  Rng rng;
  Placement microarray;
  long long cost = 0;
  Placement best;
  long long best_cost = 0;
  long long sa = 0;
  long long uphill_bonus = 0;
  bool ok = false;
  // last trial evaluation, reused by the uphill branch of the same trial
  Location a, b;
  LocalCost lc;

  Worker(int id_, std::uint64_t seed) : id(id_), rng(seed, static_cast<std::uint64_t>(id_)) {}
};

struct BudgetClock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
  }
  // Coordinator-side budget check, once per round, broadcast to all workers.
  bool allows(const RoundBudget& b, long long rounds_done) const {
    if (b.kind == RoundBudget::Kind::Rounds)
      return rounds_done < static_cast<long long>(b.amount);
    return elapsed_s() <= b.amount;
  }
};

void record_checkpoints(const SearchParams& params, const BudgetClock& clock, long long rounds_done,
                        long long best_cost, double& next_at, RunReport& report) {
  if (params.checkpoint_every <= 0) return;
  double pos = params.budget.kind == RoundBudget::Kind::Rounds ? static_cast<double>(rounds_done)
                                                               : clock.elapsed_s();
  while (pos >= next_at) {
    report.checkpoints.push_back({next_at, best_cost});
    next_at += params.checkpoint_every;
  }
}

void replicate(std::vector<Worker>& workers, int source_id, bool with_best) {
  const Worker& src = workers[static_cast<size_t>(source_id) - 1];
  Placement microarray = src.microarray;
  long long cost = src.cost;
  Placement best = src.best;
  long long best_cost = src.best_cost;
  for (Worker& w : workers) {
    w.microarray = microarray;
    w.cost = cost;
    if (with_best) {
      w.best = best;
      w.best_cost = best_cost;
    }
    w.ok = true;
  }
}

void verify_round_boundary(const ProbeSet& sp, const std::vector<Worker>& workers) {
  const Worker& w0 = workers.front();
  if (total_cost(sp, w0.microarray) != w0.cost)
    throw std::logic_error("engine: replicated COST diverged from recompute");
  if (!w0.microarray.is_permutation())
    throw std::logic_error("engine: placement lost the permutation invariant");
  for (const Worker& w : workers) {
    if (w.microarray != w0.microarray || w.cost != w0.cost || w.best != w0.best ||
        w.best_cost != w0.best_cost || w.sa != w0.sa || w.uphill_bonus != w0.uphill_bonus)
      throw std::logic_error("engine: worker states diverged at a round boundary");
  }
}

SearchResult finish(const char* name, const ProbeSet& sp, const SearchParams& params,
                    std::vector<Worker>& workers, long long rounds, const BudgetClock& clock,
                    RunReport&& report) {
  (void)sp;
  Worker& w1 = workers.front();
  report.algorithm = name;
  report.workers = params.workers;
  report.seed = params.seed;
  report.budget = params.budget;
  report.rounds_executed = rounds;
  report.best_cost = w1.best_cost;
  report.final_cost = w1.cost;
  report.elapsed_ms = clock.elapsed_ms();
  return {w1.best, w1.best_cost, std::move(report)};
}

std::vector<Worker> make_workers(const ProbeSet& sp, const SearchParams& params,
                                 SelectionScript* script) {
  std::vector<Worker> workers;
  workers.reserve(static_cast<size_t>(params.workers));
  for (int i = 1; i <= params.workers; ++i) workers.emplace_back(i, params.seed);

  // worker 1 creates (or the script supplies) the initial placement,
  // everyone else adopts it
  Placement initial;
  if (script && script->initial) {
    initial = *script->initial;
    if (initial.dim != sp.dim || !initial.is_permutation())
      throw ReplayError("scripted initial placement is not a valid permutation for this instance");
  } else {
    initial = random_placement(sp, workers.front().rng);
  }
  long long cost = total_cost(sp, initial);
  for (Worker& w : workers) {
    w.microarray = initial;
    w.cost = cost;
    w.best = initial;
    w.best_cost = cost;
  }
  return workers;
}

SearchResult alg_run(const char* name, bool use_average, const ProbeSet& sp,
                     const SearchParams& params, SelectionScript* script) {
  sp.validate();
  params.validate();
  BudgetClock clock;
  Rng coordinator(params.seed, 0);
  std::vector<Worker> workers = make_workers(sp, params, script);

  long long avg_num = workers.front().cost;
  const long long avg_den = sp.pair_count();

  RunReport report;
  double next_checkpoint = params.checkpoint_every;
  long long rounds = 0;

  while (sp.dim >= 2 && clock.allows(params.budget, rounds)) {
    RoundTrace rt;
    for (Worker& w : workers) w.ok = false;
    long long nrt = 0;

    while (true) {
      ++nrt;
      TrialTrace tt;
      for (Worker& w : workers) {
        std::pair<Location, Location> pick =
            script ? script->next_pair(w.id) : random_location_pair(sp.dim, w.rng);
        w.a = pick.first;
        w.b = pick.second;
        if (script) {
          if (!w.microarray.in_bounds(w.a) || !w.microarray.in_bounds(w.b) || w.a == w.b)
            throw ReplayError("scripted location pair is invalid for worker P" +
                              std::to_string(w.id));
        }
        w.lc = pair_local_cost(sp, w.microarray, w.a, w.b);
        if (params.trace) tt.evals.push_back({w.id, w.lc.localcost, w.lc.newlocalcost});
        if (w.lc.newlocalcost <= w.lc.localcost) {
          w.ok = true;
          apply_swap(w.microarray, w.a, w.b);
          w.cost -= w.lc.localcost - w.lc.newlocalcost;
        }
      }
      if (params.trace) rt.trials.push_back(std::move(tt));

      std::vector<int> candidates;
      for (const Worker& w : workers)
        if (w.ok) candidates.push_back(w.id);
      if (!candidates.empty()) {
        int source = candidates.size() == 1 ? candidates.front()
                     : script               ? script->next_source(candidates)
                                            : *select_source(candidates, coordinator).source;
        replicate(workers, source, /*with_best=*/false);
        break;
      }

      if (nrt >= params.max_trials1) {
        long long gate = use_average ? (8 * avg_num) / avg_den : params.max_cost;
        for (Worker& w : workers) {
          long long delta = static_cast<long long>(w.lc.newlocalcost) - w.lc.localcost;
          if (w.lc.newlocalcost <= gate + w.uphill_bonus &&
              w.cost + delta <= w.best_cost + params.max_cost2) {
            w.ok = true;
            apply_swap(w.microarray, w.a, w.b);
            w.cost += delta;
            if (params.trace) rt.uphill.push_back({w.id, w.cost, w.best_cost});
          }
        }
      }
      candidates.clear();
      for (const Worker& w : workers)
        if (w.ok) candidates.push_back(w.id);
      if (!candidates.empty()) {
        int source = candidates.size() == 1 ? candidates.front()
                     : script               ? script->next_source(candidates)
                                            : *select_source(candidates, coordinator).source;
        replicate(workers, source, /*with_best=*/false);
        break;
      }

      if (nrt >= params.max_trials2) break;  // round ends with no accepted move
    }

    // round epilogue, executed identically at every worker
    if (use_average) avg_num = workers.front().cost;
    for (Worker& w : workers) {
      if (w.cost < w.best_cost) {
        w.best_cost = w.cost;
        w.best = w.microarray;
      }
      ++w.sa;
      if (w.uphill_bonus == 0) {
        if (w.sa == params.winlength1) {
          w.sa = 0;
          w.uphill_bonus = params.max_cost1;
        }
      } else {
        if (w.sa == params.winlength2) {
          w.sa = 0;
          w.uphill_bonus = 0;
        }
      }
    }
    ++rounds;
    if (params.verify) verify_round_boundary(sp, workers);
    if (params.trace) {
      rt.cost_after = workers.front().cost;
      rt.best_cost_after = workers.front().best_cost;
      if (use_average) {
        rt.avg_num = avg_num;
        rt.avg_den = avg_den;
      }
      rt.sa_after = workers.front().sa;
      rt.uphill_bonus_after = workers.front().uphill_bonus;
      report.trace.push_back(std::move(rt));
    }
    record_checkpoints(params, clock, rounds, workers.front().best_cost, next_checkpoint, report);
  }

  return finish(name, sp, params, workers, rounds, clock, std::move(report));
}

}  // namespace

SearchResult alg1_run(const ProbeSet& sp, const SearchParams& params, SelectionScript* script) {
  return alg_run("alg1", /*use_average=*/true, sp, params, script);
}

SearchResult alg2_run(const ProbeSet& sp, const SearchParams& params, SelectionScript* script) {
  return alg_run("alg2", /*use_average=*/false, sp, params, script);
}

SearchResult ls_par_run(const ProbeSet& sp, const SearchParams& params) {
  sp.validate();
  params.validate();
  BudgetClock clock;
  Rng coordinator(params.seed, 0);
  std::vector<Worker> workers = make_workers(sp, params, nullptr);

  RunReport report;
  double next_checkpoint = params.checkpoint_every;
  long long rounds = 0;

  while (sp.dim >= 2 && clock.allows(params.budget, rounds)) {
    RoundTrace rt;
    TrialTrace tt;
    for (Worker& w : workers) {
      auto [a, b] = random_location_pair(sp.dim, w.rng);
      LocalCost lc = pair_local_cost(sp, w.microarray, a, b);
      if (params.trace) tt.evals.push_back({w.id, lc.localcost, lc.newlocalcost});
      if (lc.newlocalcost < lc.localcost) {
        apply_swap(w.microarray, a, b);
        w.cost -= lc.localcost - lc.newlocalcost;
        if (w.cost < w.best_cost) {  // guarded running minimum
          w.best_cost = w.cost;
          w.best = w.microarray;
        }
      } else {
        double n = w.rng.real01();
        if (n <= params.pr) {
          apply_swap(w.microarray, a, b);
          w.cost += lc.newlocalcost - lc.localcost;
        }
      }
    }

    // everyone adopts a random minimum-cost worker, best state included
    long long min_cost = workers.front().cost;
    for (const Worker& w : workers) min_cost = std::min(min_cost, w.cost);
    std::vector<int> candidates;
    for (const Worker& w : workers)
      if (w.cost == min_cost) candidates.push_back(w.id);
    replicate(workers, *select_source(candidates, coordinator).source, /*with_best=*/true);

    ++rounds;
    if (params.verify) verify_round_boundary(sp, workers);
    if (params.trace) {
      rt.trials.push_back(std::move(tt));
      rt.cost_after = workers.front().cost;
      rt.best_cost_after = workers.front().best_cost;
      report.trace.push_back(std::move(rt));
    }
    record_checkpoints(params, clock, rounds, workers.front().best_cost, next_checkpoint, report);
  }

  return finish("ls-par", sp, params, workers, rounds, clock, std::move(report));
}

}  // namespace blmp
