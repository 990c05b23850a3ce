#include "blmp/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace blmp {

ProbeSet generate_probeset(int dim, int probelength, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("generate_probeset: dim must be >= 1");
  if (probelength < 1) throw std::invalid_argument("generate_probeset: probelength must be >= 1");
  Rng rng(seed, 0);
  ProbeSet sp;
  sp.dim = dim;
  sp.probelength = probelength;
  sp.probes.reserve(static_cast<size_t>(dim) * dim);
  std::string buf(static_cast<size_t>(probelength), 'A');
  for (int i = 0; i < dim * dim; ++i) {
    for (char& c : buf) c = "ACGT"[rng.below(4)];
    sp.probes.push_back(Probe::from_string(buf));
  }
  return sp;
}

namespace {

// Cells (1-based, row-major flat index) forming a fundamental domain of the
// dihedral symmetry group: r <= c within the top-left quadrant.
std::vector<char> fundamental_cells(int dim) {
  std::vector<char> in(static_cast<size_t>(dim) * dim, 0);
  int half = (dim + 1) / 2;
  for (int r = 1; r <= half; ++r)
    for (int c = r; c <= half; ++c) in[static_cast<size_t>(r - 1) * dim + (c - 1)] = 1;
  return in;
}

}  // namespace

OracleResult brute_force_optimum(const ProbeSet& sp, bool prune_symmetries) {
  sp.validate();
  if (sp.dim > 3)
    throw std::invalid_argument("brute_force_optimum: instance too large (dim must be <= 3)");

  int n = sp.count();
  // pairwise distance table, 1-based
  std::vector<int> dist(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      dist[static_cast<size_t>(i) * (n + 1) + j] = hamming(sp.probe(i), sp.probe(j));
  auto d = [&](ProbeIndex i, ProbeIndex j) { return dist[static_cast<size_t>(i) * (n + 1) + j]; };

  // neighbor pair list over flat cell indices
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < sp.dim; ++r)
    for (int c = 0; c < sp.dim; ++c) {
      if (c + 1 < sp.dim) edges.emplace_back(r * sp.dim + c, r * sp.dim + c + 1);
      if (r + 1 < sp.dim) edges.emplace_back(r * sp.dim + c, (r + 1) * sp.dim + c);
    }

  std::vector<char> canonical = fundamental_cells(sp.dim);
  std::vector<ProbeIndex> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;

  OracleResult result;
  result.optimum_cost = -1;
  do {
    if (prune_symmetries) {
      auto pos1 = static_cast<size_t>(
          std::find(perm.begin(), perm.end(), 1) - perm.begin());
      if (!canonical[pos1]) continue;
    }
    ++result.enumerated_count;
    long long cost = 0;
    for (auto [u, v] : edges) cost += d(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    if (result.optimum_cost < 0 || cost < result.optimum_cost) {
      result.optimum_cost = cost;
      result.witness.dim = sp.dim;
      result.witness.cells = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return result;
}

IncrementalReport verify_incremental(const ProbeSet& sp, std::uint64_t seed, long long swaps) {
  sp.validate();
  IncrementalReport rep;
  Rng rng(seed, 1);
  Placement pl = random_placement(sp, rng);
  long long cost = total_cost(sp, pl);
  for (long long step = 0; step < swaps && sp.dim >= 2; ++step) {
    auto [a, b] = random_location_pair(sp.dim, rng);
    cost += swap_delta(sp, pl, a, b);
    apply_swap(pl, a, b);
    long long recomputed = total_cost(sp, pl);
    ++rep.swaps_done;
    if (cost != recomputed) {
      rep.passed = false;
      rep.divergence_step = step + 1;
      rep.maintained_cost = cost;
      rep.recomputed_cost = recomputed;
      return rep;
    }
  }
  return rep;
}

}  // namespace blmp
