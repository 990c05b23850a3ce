#include "blmp/model.hpp"

#include <bit>
#include <stdexcept>

namespace blmp {

namespace {

constexpr int kSymbolsPerWord = 32;

int encode_symbol(char c) {
  switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    default:
      throw std::invalid_argument(std::string("illegal probe symbol '") + c + "'");
  }
}

char decode_symbol(int v) { return "ACGT"[v & 3]; }

}  // namespace

Probe Probe::from_string(std::string_view s) {
  Probe p;
  p.length = static_cast<int>(s.size());
  p.words.assign((s.size() + kSymbolsPerWord - 1) / kSymbolsPerWord, 0);
  for (size_t i = 0; i < s.size(); ++i) {
    std::uint64_t code = static_cast<std::uint64_t>(encode_symbol(s[i]));
    p.words[i / kSymbolsPerWord] |= code << (2 * (i % kSymbolsPerWord));
  }
  return p;
}

std::string Probe::to_string() const {
  std::string s(static_cast<size_t>(length), '?');
  for (int i = 0; i < length; ++i) {
    auto w = words[static_cast<size_t>(i) / kSymbolsPerWord];
    s[static_cast<size_t>(i)] = decode_symbol(static_cast<int>(w >> (2 * (i % kSymbolsPerWord))));
  }
  return s;
}

int hamming(const Probe& a, const Probe& b) {
  if (a.length != b.length) throw std::invalid_argument("hamming: probe length mismatch");
  int d = 0;
  for (size_t i = 0; i < a.words.size(); ++i) {
    std::uint64_t x = a.words[i] ^ b.words[i];
    // mark each 2-bit lane that differs in either bit
    std::uint64_t lanes = (x | (x >> 1)) & 0x5555555555555555ull;
    d += std::popcount(lanes);
  }
  return d;
}

void ProbeSet::validate() const {
  if (dim < 1) throw std::invalid_argument("ProbeSet: dim must be >= 1");
  if (probelength < 1) throw std::invalid_argument("ProbeSet: probelength must be >= 1");
  if (static_cast<long long>(probes.size()) != static_cast<long long>(dim) * dim)
    throw std::invalid_argument("ProbeSet: probe count must equal dim^2");
  for (const Probe& p : probes)
    if (p.length != probelength)
      throw std::invalid_argument("ProbeSet: all probes must share probelength");
}

NeighborList neighbor_locations(int dim, Location loc) {
  if (loc.row < 1 || loc.row > dim || loc.col < 1 || loc.col > dim)
    throw std::invalid_argument("neighbor_locations: location out of bounds");
  NeighborList n;
  if (loc.row > 1) n.locs[n.count++] = {loc.row - 1, loc.col};
  if (loc.row < dim) n.locs[n.count++] = {loc.row + 1, loc.col};
  if (loc.col > 1) n.locs[n.count++] = {loc.row, loc.col - 1};
  if (loc.col < dim) n.locs[n.count++] = {loc.row, loc.col + 1};
  return n;
}

Placement Placement::row_major(int dim) {
  Placement pl;
  pl.dim = dim;
  pl.cells.resize(static_cast<size_t>(dim) * dim);
  for (size_t i = 0; i < pl.cells.size(); ++i) pl.cells[i] = static_cast<ProbeIndex>(i + 1);
  return pl;
}

bool Placement::is_permutation() const {
  std::vector<char> seen(cells.size() + 1, 0);
  for (ProbeIndex idx : cells) {
    if (idx < 1 || idx > static_cast<ProbeIndex>(cells.size())) return false;
    if (seen[static_cast<size_t>(idx)]) return false;
    seen[static_cast<size_t>(idx)] = 1;
  }
  return true;
}

long long total_cost(const ProbeSet& sp, const Placement& pl) {
  long long cost = 0;
  for (int i = 1; i <= pl.dim; ++i)
    for (int j = 1; j < pl.dim; ++j)
      cost += hamming(sp.probe(pl.at(i, j)), sp.probe(pl.at(i, j + 1)));
  for (int j = 1; j <= pl.dim; ++j)
    for (int i = 1; i < pl.dim; ++i)
      cost += hamming(sp.probe(pl.at(i, j)), sp.probe(pl.at(i + 1, j)));
  return cost;
}

LocalCost pair_local_cost(const ProbeSet& sp, const Placement& pl, Location a, Location b) {
  if (a == b) throw std::invalid_argument("pair_local_cost: locations must differ");
  if (!pl.in_bounds(a) || !pl.in_bounds(b))
    throw std::invalid_argument("pair_local_cost: location out of bounds");
  const Probe& pa = sp.probe(pl.at(a));
  const Probe& pb = sp.probe(pl.at(b));
  LocalCost lc;
  for (Location n : neighbor_locations(pl.dim, a)) {
    const Probe& occ = sp.probe(pl.at(n));
    lc.localcost += hamming(pa, occ);
    lc.newlocalcost += (n == b) ? hamming(pb, pa) : hamming(pb, occ);
  }
  for (Location n : neighbor_locations(pl.dim, b)) {
    const Probe& occ = sp.probe(pl.at(n));
    lc.localcost += hamming(pb, occ);
    lc.newlocalcost += (n == a) ? hamming(pa, pb) : hamming(pa, occ);
  }
  return lc;
}

long long swap_delta(const ProbeSet& sp, const Placement& pl, Location a, Location b) {
  LocalCost lc = pair_local_cost(sp, pl, a, b);
  return static_cast<long long>(lc.newlocalcost) - lc.localcost;
}

void apply_swap(Placement& pl, Location a, Location b) {
  if (a == b) throw std::invalid_argument("apply_swap: locations must differ");
  std::swap(pl.at(a), pl.at(b));
}

Placement random_placement(const ProbeSet& sp, Rng& rng) {
  Placement pl = Placement::row_major(sp.dim);
  for (size_t i = pl.cells.size() - 1; i > 0; --i) {
    size_t j = static_cast<size_t>(rng.below(i + 1));
    std::swap(pl.cells[i], pl.cells[j]);
  }
  return pl;
}

std::pair<Location, Location> random_location_pair(int dim, Rng& rng) {
  if (dim < 2) throw std::invalid_argument("random_location_pair: dim must be >= 2");
  int n = dim * dim;
  int c1 = rng.below_int(n);
  int c2 = rng.below_int(n - 1);
  if (c2 >= c1) ++c2;
  Location a{c1 / dim + 1, c1 % dim + 1};
  Location b{c2 / dim + 1, c2 % dim + 1};
  return {a, b};
}

}  // namespace blmp
