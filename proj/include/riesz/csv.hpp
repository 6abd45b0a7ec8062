#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "riesz/verify.hpp"

namespace riesz::csv {

// Round-trip decimal ("%.17g").
std::string number(double v);
std::string boolean(bool v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const Table& table);
// Column-aligned text with a rule under the header.
void write_pretty(std::ostream& out, const Table& table);

Table residual_table(const std::vector<ResidualReport>& reports);
Table hardy_littlewood_table(const HardyLittlewoodReport& hl, const RamanujanReport* ram);
Table mellin_table(const std::vector<MellinReport>& reports);
Table exponent_summary_table(const ExponentFit& fit);
Table exponent_grid_table(const ExponentFit& fit);
Table pk_table(const std::vector<std::pair<std::string, TermBreakdown>>& rows, double k, double x);
Table zero_table(const std::vector<ZeroRecord>& records);

}  // namespace riesz::csv
