#ifndef BLMP_REPORT_HPP
#define BLMP_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace blmp {

// Search budget: either a wall-clock limit (checked at round granularity,
// so the last round may overshoot slightly) or a fixed round count. Round
// budgets are the reproducible mode.
struct RoundBudget {
  enum class Kind { WallClockSeconds, Rounds };
  Kind kind = Kind::Rounds;
  double amount = 1;
};

struct Checkpoint {
  double at = 0;  // rounds or seconds, matching the budget kind
  long long best_cost = 0;
};

// Per-trial evaluations, recorded only when tracing is on.
struct TrialTrace {
  struct Eval {
    int worker = 0;
    int localcost = 0;
    int newlocalcost = 0;
  };
  std::vector<Eval> evals;
};

struct UphillEvent {
  int worker = 0;
  long long cost_after = 0;
  long long best_cost_at_check = 0;
};

struct RoundTrace {
  std::vector<TrialTrace> trials;
  std::vector<UphillEvent> uphill;
  long long cost_after = 0;
  long long best_cost_after = 0;
  // exact average as a fraction; den == 0 when the algorithm keeps none
  long long avg_num = 0;
  long long avg_den = 0;
  long long sa_after = 0;
  long long uphill_bonus_after = 0;
};

struct RunReport {
  std::string instance;
  std::string algorithm;
  int workers = 1;
  std::uint64_t seed = 0;
  RoundBudget budget;
  long long rounds_executed = 0;
  long long best_cost = 0;
  long long final_cost = 0;
  long long elapsed_ms = 0;
  std::vector<Checkpoint> checkpoints;
  std::vector<RoundTrace> trace;  // only when tracing was requested
};

}  // namespace blmp

#endif
