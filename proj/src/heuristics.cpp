#include "blmp/heuristics.hpp"

#include <chrono>
#include <stdexcept>

namespace blmp {

void LsParams::validate() const {
  if (pr < 0.0 || pr > 1.0) throw std::invalid_argument("LsParams: pr must be in [0,1]");
  if (budget.amount <= 0) throw std::invalid_argument("LsParams: budget amount must be > 0");
}

LsResult ls_run(const ProbeSet& sp, const LsParams& params) {
  sp.validate();
  params.validate();
  using clock = std::chrono::steady_clock;
  auto start = clock::now();

  Rng rng(params.seed, 1);
  Placement microarray = random_placement(sp, rng);
  long long cost = total_cost(sp, microarray);
  Placement best = microarray;
  long long best_cost = cost;

  RunReport report;
  report.algorithm = "ls";
  report.workers = 1;
  report.seed = params.seed;
  report.budget = params.budget;

  auto elapsed_s = [&] {
    return std::chrono::duration<double>(clock::now() - start).count();
  };
  bool rounds_mode = params.budget.kind == RoundBudget::Kind::Rounds;
  double next_checkpoint = params.checkpoint_every;

  long long iter = 0;
  while (sp.dim >= 2 &&
         (rounds_mode ? iter < static_cast<long long>(params.budget.amount)
                      : elapsed_s() <= params.budget.amount)) {
    auto [a, b] = random_location_pair(sp.dim, rng);
    LocalCost lc = pair_local_cost(sp, microarray, a, b);
    if (lc.newlocalcost < lc.localcost) {
      apply_swap(microarray, a, b);
      cost -= lc.localcost - lc.newlocalcost;
      if (cost < best_cost) {  // guarded running minimum
        best_cost = cost;
        best = microarray;
      }
    } else {
      double n = rng.real01();
      if (n <= params.pr) {
        apply_swap(microarray, a, b);
        cost += lc.newlocalcost - lc.localcost;
      }
    }
    if (params.verify && total_cost(sp, microarray) != cost)
      throw std::logic_error("ls_run: maintained COST diverged from recompute");
    ++iter;
    if (params.checkpoint_every > 0) {
      double pos = rounds_mode ? static_cast<double>(iter) : elapsed_s();
      while (pos >= next_checkpoint) {
        report.checkpoints.push_back({next_checkpoint, best_cost});
        next_checkpoint += params.checkpoint_every;
      }
    }
  }

  report.rounds_executed = iter;
  report.best_cost = best_cost;
  report.final_cost = cost;
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
  return {std::move(best), best_cost, std::move(report)};
}

Placement epitaxial_place(const ProbeSet& sp, std::uint64_t seed) {
  sp.validate();
  Rng rng(seed, 1);
  int n = sp.count();

  Placement pl;
  pl.dim = sp.dim;
  pl.cells.assign(static_cast<size_t>(n), 0);  // 0 = empty
  std::vector<ProbeIndex> unplaced;
  unplaced.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) unplaced.push_back(i);

  auto remove_probe = [&](size_t pos) { unplaced.erase(unplaced.begin() + static_cast<long>(pos)); };

  // first probe on a random cell
  size_t first = static_cast<size_t>(rng.below(unplaced.size()));
  int first_cell = rng.below_int(n);
  pl.cells[static_cast<size_t>(first_cell)] = unplaced[first];
  remove_probe(first);

  std::vector<int> candidates;  // flat cell indices, row-major order
  std::vector<size_t> best_probes;
  while (!unplaced.empty()) {
    // empty cells with the maximum number of filled neighbors
    candidates.clear();
    int best_filled = -1;
    for (int cell = 0; cell < n; ++cell) {
      if (pl.cells[static_cast<size_t>(cell)] != 0) continue;
      Location loc{cell / sp.dim + 1, cell % sp.dim + 1};
      int filled = 0;
      for (Location nb : neighbor_locations(sp.dim, loc))
        if (pl.at(nb) != 0) ++filled;
      if (filled > best_filled) {
        best_filled = filled;
        candidates.clear();
      }
      if (filled == best_filled) candidates.push_back(cell);
    }
    int cell = candidates[static_cast<size_t>(rng.below(candidates.size()))];
    Location loc{cell / sp.dim + 1, cell % sp.dim + 1};

    // unplaced probe minimizing the summed distance to the filled neighbors
    best_probes.clear();
    int best_sum = -1;
    for (size_t pi = 0; pi < unplaced.size(); ++pi) {
      const Probe& cand = sp.probe(unplaced[pi]);
      int sum = 0;
      for (Location nb : neighbor_locations(sp.dim, loc))
        if (pl.at(nb) != 0) sum += hamming(cand, sp.probe(pl.at(nb)));
      if (best_sum < 0 || sum < best_sum) {
        best_sum = sum;
        best_probes.clear();
      }
      if (sum == best_sum) best_probes.push_back(pi);
    }
    size_t chosen = best_probes[static_cast<size_t>(rng.below(best_probes.size()))];
    pl.cells[static_cast<size_t>(cell)] = unplaced[chosen];
    remove_probe(chosen);
  }
  return pl;
}

}  // namespace blmp
