#include <doctest.h>

#include <cmath>

#include "blmp/oracle.hpp"
#include "blmp/replay_fixture.hpp"

using namespace blmp;

TEST_CASE("generate_probeset shape and determinism") {
  ProbeSet one = generate_probeset(1, 5, 3);
  CHECK(one.probes.size() == 1);
  CHECK(one.probes.front().length == 5);

  CHECK(generate_probeset(4, 12, 9) == generate_probeset(4, 12, 9));
  CHECK(generate_probeset(4, 12, 9) != generate_probeset(4, 12, 10));
  CHECK_THROWS_AS(generate_probeset(0, 5, 1), std::invalid_argument);
}

TEST_CASE("generated symbols are roughly uniform") {
  long long counts[4] = {0, 0, 0, 0};
  long long total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ProbeSet sp = generate_probeset(10, 25, seed);
    for (const Probe& p : sp.probes)
      for (char c : p.to_string()) {
        switch (c) {
          case 'A': ++counts[0]; break;
          case 'C': ++counts[1]; break;
          case 'G': ++counts[2]; break;
          case 'T': ++counts[3]; break;
        }
        ++total;
      }
  }
  for (long long c : counts)
    CHECK(std::abs(static_cast<double>(c) / total - 0.25) <= 0.01);
}

TEST_CASE("brute force trivial and 2x2 optimum") {
  ProbeSet one = generate_probeset(1, 5, 4);
  CHECK(brute_force_optimum(one).optimum_cost == 0);

  ProbeSet sp = replay_probeset();
  sp.dim = 2;
  sp.probes.resize(4);
  OracleResult r = brute_force_optimum(sp, /*prune_symmetries=*/false);
  CHECK(r.optimum_cost == 15);
  CHECK(r.enumerated_count == 24);
  CHECK(total_cost(sp, r.witness) == 15);
  // optimum pairs p1 with p4 and p2 with p3 across the diagonals
  Location pos1, pos4;
  for (int row = 1; row <= 2; ++row)
    for (int col = 1; col <= 2; ++col) {
      if (r.witness.at(row, col) == 1) pos1 = {row, col};
      if (r.witness.at(row, col) == 4) pos4 = {row, col};
    }
  CHECK(pos1.row != pos4.row);
  CHECK(pos1.col != pos4.col);
}

TEST_CASE("symmetry pruning never changes the optimum") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ProbeSet sp = generate_probeset(3, 5, seed);
    OracleResult full = brute_force_optimum(sp, false);
    OracleResult pruned = brute_force_optimum(sp, true);
    CHECK(full.optimum_cost == pruned.optimum_cost);
    CHECK(pruned.enumerated_count < full.enumerated_count);
    CHECK(total_cost(sp, pruned.witness) == pruned.optimum_cost);
  }
}

TEST_CASE("optimum is invariant under probe relabeling") {
  ProbeSet sp = generate_probeset(2, 6, 31);
  ProbeSet relabeled = sp;
  std::swap(relabeled.probes[0], relabeled.probes[3]);
  std::swap(relabeled.probes[1], relabeled.probes[2]);
  CHECK(brute_force_optimum(sp).optimum_cost == brute_force_optimum(relabeled).optimum_cost);
}

TEST_CASE("brute force refuses large instances") {
  ProbeSet sp = generate_probeset(4, 5, 1);
  CHECK_THROWS_AS(brute_force_optimum(sp), std::invalid_argument);
}

TEST_CASE("verify_incremental passes on honest arithmetic") {
  ProbeSet big = generate_probeset(8, 25, 5);
  IncrementalReport r = verify_incremental(big, 1, 2000);
  CHECK(r.passed);
  CHECK(r.swaps_done == 2000);

  // dim=2: every swap is adjacent or diagonal
  ProbeSet tiny = generate_probeset(2, 25, 6);
  r = verify_incremental(tiny, 2, 1000);
  CHECK(r.passed);

  r = verify_incremental(big, 3, 0);
  CHECK(r.passed);
  CHECK(r.swaps_done == 0);
}
