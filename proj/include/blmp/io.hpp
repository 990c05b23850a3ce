#ifndef BLMP_IO_HPP
#define BLMP_IO_HPP

#include <stdexcept>
#include <string>

#include "blmp/model.hpp"
#include "blmp/report.hpp"

namespace blmp {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Probes file: UTF-8 text, '#' comment lines ignored, first data line is
// "<dim> <probelength>", then exactly dim^2 lines with one uppercase
// sequence each.
ProbeSet read_probes_file(const std::string& path);
void write_probes_file(const ProbeSet& sp, const std::string& path);

// Placement file: dim lines of dim space-separated 1-based probe indices;
// comments as above. The bijection is validated on read.
Placement read_placement_file(const std::string& path, const ProbeSet& sp);
void write_placement_file(const Placement& pl, const std::string& path);

// CSV schema: header row mandatory, one row per run. elapsed_ms is reported
// as 0 for round-budget runs so rows are byte-reproducible.
std::string csv_header();
std::string csv_row(const RunReport& report);

}  // namespace blmp

#endif
