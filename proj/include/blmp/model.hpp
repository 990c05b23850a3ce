#ifndef BLMP_MODEL_HPP
#define BLMP_MODEL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blmp/rng.hpp"

namespace blmp {

// 1-based probe index, matching the p1..pN naming and the placement file
// format. Index 0 marks an empty cell during greedy construction.
using ProbeIndex = int;

// A fixed-length sequence over {A,C,G,T}, packed 2 bits per symbol so that
// the Hamming distance is a couple of popcounts per 32 symbols.
struct Probe {
  int length = 0;
  std::vector<std::uint64_t> words;

  static Probe from_string(std::string_view s);
  std::string to_string() const;

  bool operator==(const Probe&) const = default;
};

// Count of positions where the two sequences differ. Lengths must match.
int hamming(const Probe& a, const Probe& b);

struct ProbeSet {
  int dim = 0;
  int probelength = 0;
  std::vector<Probe> probes;  // probes[i-1] holds p_i

  const Probe& probe(ProbeIndex i) const { return probes[static_cast<size_t>(i) - 1]; }
  int count() const { return dim * dim; }
  // Number of orthogonally adjacent site pairs on the grid.
  long long pair_count() const { return 2LL * dim * (dim - 1); }

  void validate() const;  // throws std::invalid_argument on bad shape

  bool operator==(const ProbeSet&) const = default;
};

// 1-based grid coordinate.
struct Location {
  int row = 0;
  int col = 0;
  bool operator==(const Location&) const = default;
};

struct NeighborList {
  std::array<Location, 4> locs;
  int count = 0;
  const Location* begin() const { return locs.data(); }
  const Location* end() const { return locs.data() + count; }
};

// The 2..4 in-bounds orthogonal neighbors, in fixed order
// up, down, left, right (out-of-bounds skipped).
NeighborList neighbor_locations(int dim, Location loc);

// dim x dim grid holding a permutation of probe indices 1..dim^2.
struct Placement {
  int dim = 0;
  std::vector<ProbeIndex> cells;  // row-major

  static Placement row_major(int dim);  // identity: p1..pN in reading order

  ProbeIndex& at(Location l) { return cells[static_cast<size_t>(l.row - 1) * dim + (l.col - 1)]; }
  ProbeIndex at(Location l) const { return cells[static_cast<size_t>(l.row - 1) * dim + (l.col - 1)]; }
  ProbeIndex& at(int row, int col) { return cells[static_cast<size_t>(row - 1) * dim + (col - 1)]; }
  ProbeIndex at(int row, int col) const { return cells[static_cast<size_t>(row - 1) * dim + (col - 1)]; }

  bool in_bounds(Location l) const {
    return l.row >= 1 && l.row <= dim && l.col >= 1 && l.col <= dim;
  }
  bool is_permutation() const;

  bool operator==(const Placement&) const = default;
};

// Sum of Hamming distances over all dim*(dim-1)*2 neighbor pairs.
long long total_cost(const ProbeSet& sp, const Placement& pl);

struct LocalCost {
  int localcost = 0;     // current occupants
  int newlocalcost = 0;  // with the two probes exchanged
};

// Local cost of the two sites before and after swapping their occupants.
// When a and b are adjacent, the "neighbor" at the other swapped site is
// evaluated with its post-swap occupant, so the shared edge contributes the
// pair distance to both sums and the difference equals the true cost delta.
LocalCost pair_local_cost(const ProbeSet& sp, const Placement& pl, Location a, Location b);

// total_cost(after swap) - total_cost(before swap), exact.
long long swap_delta(const ProbeSet& sp, const Placement& pl, Location a, Location b);

void apply_swap(Placement& pl, Location a, Location b);

// Uniform random permutation of probe indices (Fisher-Yates), row-major.
Placement random_placement(const ProbeSet& sp, Rng& rng);

// Two distinct uniform locations, drawn as cell indices: the first over all
// dim^2 cells, the second over the remaining dim^2-1 (shifted past the
// first). Requires dim >= 2. Two draws per call, always.
std::pair<Location, Location> random_location_pair(int dim, Rng& rng);

}  // namespace blmp

#endif
