#ifndef BLMP_ORACLE_HPP
#define BLMP_ORACLE_HPP

#include <cstdint>

#include "blmp/model.hpp"

namespace blmp {

struct OracleResult {
  long long optimum_cost = 0;
  Placement witness;
  long long enumerated_count = 0;
};

// dim^2 probes with symbols drawn i.i.d. uniform over {A,C,G,T} from
// stream 0 of the given seed.
ProbeSet generate_probeset(int dim, int probelength, std::uint64_t seed);

// Exhaustive enumeration of all placements, dim <= 3 only. With
// prune_symmetries, probe 1 is restricted to one cell per orbit of the 8
// grid symmetries; the optimum is unchanged, only enumerated_count shrinks.
OracleResult brute_force_optimum(const ProbeSet& sp, bool prune_symmetries = true);

struct IncrementalReport {
  bool passed = true;
  long long swaps_done = 0;
  // first divergence, when failed
  long long divergence_step = -1;
  long long maintained_cost = 0;
  long long recomputed_cost = 0;
};

// Applies `swaps` random swaps from a random start, maintaining the cost via
// swap_delta and recomputing from scratch after each; reports the first
// divergence if any.
IncrementalReport verify_incremental(const ProbeSet& sp, std::uint64_t seed, long long swaps);

}  // namespace blmp

#endif
