#ifndef BLMP_REPLAY_FIXTURE_HPP
#define BLMP_REPLAY_FIXTURE_HPP

#include "blmp/engine.hpp"
#include "blmp/model.hpp"

namespace blmp {

// Bundled 4x4 walkthrough: a fixed 16-probe instance, a row-major initial
// placement, and a fully scripted 3-worker run of four rounds. Used by the
// `replay` subcommand and as a golden trace in the tests.
ProbeSet replay_probeset();
Placement replay_initial_placement();
SelectionScript replay_script();
SearchParams replay_params();

// Runs the scripted replay with tracing on.
SearchResult run_replay();

}  // namespace blmp

#endif
