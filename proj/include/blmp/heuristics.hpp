#ifndef BLMP_HEURISTICS_HPP
#define BLMP_HEURISTICS_HPP

#include <cstdint>

#include "blmp/model.hpp"
#include "blmp/report.hpp"

namespace blmp {

struct LsParams {
  RoundBudget budget;
  double pr = 0.0;  // probability of accepting a non-improving swap
  std::uint64_t seed = 0;
  bool verify = false;  // recompute the cost after every iteration and assert
  double checkpoint_every = 0;  // 0 = off; same unit as the budget

  void validate() const;
};

struct LsResult {
  Placement best;
  long long best_cost = 0;
  RunReport report;
};

// Probabilistic hill-climber over the swap neighborhood. Improving swaps
// (strict) are always taken; any other swap is taken with probability pr.
// best tracks the running minimum cost ever observed.
LsResult ls_run(const ProbeSet& sp, const LsParams& params);

// Greedy construction: seed with a random probe at a random cell, then
// repeatedly fill an empty cell chosen uniformly among those with the most
// filled neighbors, placing the unplaced probe that minimizes the summed
// distance to those neighbors (ties broken uniformly at random). All draws
// come from stream 1 of the given seed, consumed in the order: first probe,
// first cell, then per step cell choice followed by probe choice.
Placement epitaxial_place(const ProbeSet& sp, std::uint64_t seed);

}  // namespace blmp

#endif
