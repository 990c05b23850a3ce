#include "blmp/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace blmp {

namespace {

// Reads the next non-comment, non-blank line; returns false at EOF.
bool next_data_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

std::string format_budget_amount(double amount) {
  if (amount == std::floor(amount) && std::abs(amount) < 1e15) {
    std::ostringstream os;
    os << static_cast<long long>(amount);
    return os.str();
  }
  std::ostringstream os;
  os << amount;
  return os.str();
}

}  // namespace

ProbeSet read_probes_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open probes file '" + path + "'", 0);
  int lineno = 0;
  std::string line;
  if (!next_data_line(in, line, lineno)) throw ParseError("missing header line", lineno);

  ProbeSet sp;
  {
    std::istringstream hs(line);
    if (!(hs >> sp.dim >> sp.probelength))
      throw ParseError("malformed header, expected '<dim> <probelength>'", lineno);
    std::string extra;
    if (hs >> extra) throw ParseError("trailing tokens after header", lineno);
  }
  if (sp.dim < 1 || sp.probelength < 1)
    throw ParseError("dim and probelength must be positive", lineno);

  int expected = sp.dim * sp.dim;
  for (int i = 0; i < expected; ++i) {
    if (!next_data_line(in, line, lineno))
      throw ParseError("expected " + std::to_string(expected) + " probe lines, found only " +
                           std::to_string(i),
                       lineno);
    std::istringstream ls(line);
    std::string seq;
    ls >> seq;
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens after probe sequence", lineno);
    if (static_cast<int>(seq.size()) != sp.probelength)
      throw ParseError("probe has length " + std::to_string(seq.size()) + ", expected " +
                           std::to_string(sp.probelength),
                       lineno);
    try {
      sp.probes.push_back(Probe::from_string(seq));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (next_data_line(in, line, lineno)) throw ParseError("unexpected extra probe line", lineno);
  return sp;
}

void write_probes_file(const ProbeSet& sp, const std::string& path) {
  sp.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << sp.dim << ' ' << sp.probelength << '\n';
  for (const Probe& p : sp.probes) out << p.to_string() << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Placement read_placement_file(const std::string& path, const ProbeSet& sp) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open placement file '" + path + "'", 0);
  int lineno = 0;
  std::string line;

  Placement pl;
  pl.dim = sp.dim;
  pl.cells.reserve(static_cast<size_t>(sp.count()));
  int n = sp.count();
  for (int r = 0; r < sp.dim; ++r) {
    if (!next_data_line(in, line, lineno))
      throw ParseError("expected " + std::to_string(sp.dim) + " grid rows, found only " +
                           std::to_string(r),
                       lineno);
    std::istringstream ls(line);
    for (int c = 0; c < sp.dim; ++c) {
      int idx;
      if (!(ls >> idx)) throw ParseError("expected " + std::to_string(sp.dim) + " indices", lineno);
      if (idx < 1 || idx > n)
        throw ParseError("probe index " + std::to_string(idx) + " out of range 1.." +
                             std::to_string(n),
                         lineno);
      pl.cells.push_back(idx);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens after grid row", lineno);
  }
  if (next_data_line(in, line, lineno)) throw ParseError("unexpected extra grid row", lineno);
  if (!pl.is_permutation())
    throw ParseError("grid is not a permutation of 1.." + std::to_string(n) +
                         " (duplicate or missing index)",
                     lineno);
  return pl;
}

void write_placement_file(const Placement& pl, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  for (int r = 1; r <= pl.dim; ++r) {
    for (int c = 1; c <= pl.dim; ++c) out << pl.at(r, c) << (c == pl.dim ? '\n' : ' ');
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::string csv_header() {
  return "instance,algorithm,workers,seed,budget_type,budget,rounds_executed,best_cost,final_cost,"
         "elapsed_ms";
}

std::string csv_row(const RunReport& report) {
  bool rounds_mode = report.budget.kind == RoundBudget::Kind::Rounds;
  std::ostringstream os;
  os << report.instance << ',' << report.algorithm << ',' << report.workers << ',' << report.seed
     << ',' << (rounds_mode ? "rounds" : "seconds") << ','
     << format_budget_amount(report.budget.amount) << ',' << report.rounds_executed << ','
     << report.best_cost << ',' << report.final_cost << ','
     << (rounds_mode ? 0 : report.elapsed_ms);
  return os.str();
}

}  // namespace blmp
