#ifndef BLMP_ENGINE_HPP
#define BLMP_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blmp/model.hpp"
#include "blmp/report.hpp"

namespace blmp {

struct SearchParams {
  int workers = 1;
  RoundBudget budget;
  double pr = 0.0;  // ls-par only
  long long max_trials1 = 20;
  long long max_trials2 = 40000;
  long long max_cost = 160;  // alg2 uphill gate
  long long max_cost1 = 10;
  long long max_cost2 = 10;
  long long winlength1 = 1120;
  long long winlength2 = 320;
  std::uint64_t seed = 0;
  bool verify = false;  // assert replication and cost exactness at round boundaries
  bool trace = false;
  double checkpoint_every = 0;  // 0 = off; same unit as the budget

  void validate() const;
};

// Thrown when a scripted replay runs out of choices or names an invalid one.
class ReplayError : public std::runtime_error {
 public:
  explicit ReplayError(const std::string& what) : std::runtime_error(what) {}
};

// Injected per-trial location pairs and barrier source choices, so a run can
// be replayed move for move. Pairs are consumed worker-major within each
// trial; source choices are consumed only at barriers with two or more
// candidates (a lone candidate needs no draw). Exhaustion raises ReplayError
// naming the consumption point.
class SelectionScript {
 public:
  std::optional<Placement> initial;  // overrides the random initial placement
  std::vector<std::pair<Location, Location>> pairs;
  std::vector<int> sources;

  std::pair<Location, Location> next_pair(int worker);
  int next_source(const std::vector<int>& candidates);

 private:
  size_t pair_cursor_ = 0;
  size_t source_cursor_ = 0;
};

struct SyncDecision {
  std::optional<int> source;
};

// Uniform choice among the reported candidates; empty list means no source,
// and a single candidate consumes no randomness.
SyncDecision select_source(const std::vector<int>& candidates, Rng& coordinator_rng);

struct SearchResult {
  Placement best;
  long long best_cost = 0;
  RunReport report;
};

// Lock-step parallel hill-climber: every round each worker performs one
// independent swap trial, then all workers adopt the state of a random
// minimum-cost worker.
SearchResult ls_par_run(const ProbeSet& sp, const SearchParams& params);

// Lock-step search with trial/uphill barriers and the alternating uphill
// bonus window. The uphill gate compares against 8x the running average
// neighbor distance (kept as an exact fraction).
SearchResult alg1_run(const ProbeSet& sp, const SearchParams& params,
                      SelectionScript* script = nullptr);

// Same machinery with a constant uphill gate (max_cost) and no average
// bookkeeping.
SearchResult alg2_run(const ProbeSet& sp, const SearchParams& params,
                      SelectionScript* script = nullptr);

}  // namespace blmp

#endif
