#include "blmp/replay_fixture.hpp"

namespace blmp {

ProbeSet replay_probeset() {
  ProbeSet sp;
  sp.dim = 4;
  sp.probelength = 5;
  for (const char* seq : {"CGATT", "GGGCC", "ATCGA", "ATGTC", "TTAGT", "ACCAG", "CCCGA", "AATTC",
                          "ATACG", "CCCTC", "GGAGA", "AGCCG", "AGACA", "ACCTA", "GAATC", "GATTT"})
    sp.probes.push_back(Probe::from_string(seq));
  return sp;
}

Placement replay_initial_placement() { return Placement::row_major(4); }

SelectionScript replay_script() {
  SelectionScript script;
  script.initial = replay_initial_placement();
  script.pairs = {
      // round 1
      {{1, 1}, {4, 3}}, {{3, 3}, {1, 1}}, {{4, 2}, {1, 4}},
      // round 2
      {{1, 2}, {4, 1}}, {{1, 2}, {4, 2}}, {{3, 1}, {4, 3}},
      // round 3
      {{1, 4}, {3, 3}}, {{4, 2}, {1, 2}}, {{1, 2}, {2, 4}},
      // round 4, trial 1
      {{1, 1}, {2, 2}}, {{2, 3}, {4, 4}}, {{1, 4}, {4, 4}},
      // round 4, trial 2
      {{1, 4}, {2, 4}}, {{1, 4}, {2, 2}}, {{4, 1}, {2, 1}},
  };
  // consumed only at barriers with several successful workers:
  // round 2 trial barrier {P1,P2} and round 4 uphill barrier {P1,P2,P3}
  script.sources = {1, 1};
  return script;
}

SearchParams replay_params() {
  SearchParams params;
  params.workers = 3;
  params.budget = {RoundBudget::Kind::Rounds, 4};
  params.max_trials1 = 2;
  params.max_trials2 = 1000;
  params.max_cost1 = 10;
  params.max_cost2 = 10;
  params.winlength1 = 70;
  params.winlength2 = 20;
  params.seed = 0;
  params.trace = true;
  params.verify = true;
  return params;
}

SearchResult run_replay() {
  ProbeSet sp = replay_probeset();
  SelectionScript script = replay_script();
  SearchParams params = replay_params();
  return alg1_run(sp, params, &script);
}

}  // namespace blmp
