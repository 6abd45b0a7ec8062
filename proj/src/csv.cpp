#include "riesz/csv.hpp"

#include <algorithm>
#include <cstdio>

namespace riesz::csv {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string boolean(bool v) { return v ? "true" : "false"; }

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void write_pretty(std::ostream& out, const Table& table) {
  std::vector<std::size_t> width(table.header.size(), 0);
  auto measure = [&width](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(table.header);
  for (const auto& row : table.rows) measure(row);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << cells[i] << std::string(i < width.size() ? width[i] - cells[i].size() : 0, ' ');
    }
    out << '\n';
  };
  line(table.header);
  std::size_t total = 0;
  for (const std::size_t w : width) total += w + 2;
  out << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
  for (const auto& row : table.rows) line(row);
}

Table residual_table(const std::vector<ResidualReport>& reports) {
  Table t{{"k", "x", "lhs", "main_term", "zero_sum", "residual", "budget", "pass"}, {}};
  for (const ResidualReport& r : reports) {
    t.rows.push_back({number(r.k), number(r.x), number(r.lhs), number(r.main_term), number(r.zero_sum),
                      number(r.residual), number(r.budget), boolean(r.pass)});
  }
  return t;
}

Table hardy_littlewood_table(const HardyLittlewoodReport& hl, const RamanujanReport* ram) {
  Table t{{"x", "lhs", "main_term", "zero_sum", "residual", "budget", "pass", "lhs_diff", "main_diff", "zero_diff",
           "matches_identity", "alpha", "beta", "symmetric_lhs", "symmetric_rhs", "symmetric_residual",
           "symmetric_pass"},
          {}};
  std::vector<std::string> row{number(hl.x), number(hl.lhs), number(hl.main_term), number(hl.zero_sum),
                               number(hl.residual), number(hl.budget), boolean(hl.pass), number(hl.lhs_diff),
                               number(hl.main_diff), number(hl.zero_diff), boolean(hl.matches_identity),
                               number(hl.alpha), number(hl.beta), number(hl.symmetric_lhs),
                               number(hl.symmetric_rhs), number(hl.symmetric_residual),
                               boolean(hl.symmetric_pass)};
  if (ram) {
    for (const char* h : {"ramanujan_left", "ramanujan_right", "ramanujan_gap", "zero_correction",
                          "ramanujan_budget", "gap_matches_correction", "ramanujan_falsified"}) {
      t.header.emplace_back(h);
    }
    for (auto&& cell : {number(ram->left), number(ram->right), number(ram->gap), number(ram->zero_correction),
                        number(ram->budget), boolean(ram->gap_matches_correction), boolean(ram->falsified)}) {
      row.push_back(cell);
    }
  }
  t.rows.push_back(std::move(row));
  return t;
}

Table mellin_table(const std::vector<MellinReport>& reports) {
  Table t{{"k", "s_re", "s_im", "x_max", "integral_re", "integral_im", "exact_re", "exact_im", "rel_error",
           "rel_error_raw", "tail_estimate", "quad_error", "panels"},
          {}};
  for (const MellinReport& m : reports) {
    t.rows.push_back({number(m.k), number(m.s.real()), number(m.s.imag()), number(m.x_max),
                      number(m.integral.real()), number(m.integral.imag()), number(m.exact.real()),
                      number(m.exact.imag()), number(m.rel_error), number(m.rel_error_raw),
                      number(m.tail_estimate), number(m.quad_error), std::to_string(m.panels)});
  }
  return t;
}

Table exponent_summary_table(const ExponentFit& fit) {
  std::string excluded;
  for (std::size_t i = 0; i < fit.excluded.size(); ++i) {
    if (i) excluded += ';';
    excluded += number(fit.excluded[i]);
  }
  return {{"k", "x_min", "x_max", "points", "used", "slope", "intercept", "r_squared", "predicted_slope",
           "excluded"},
          {{number(fit.k), number(fit.x_grid.front()), number(fit.x_grid.back()), std::to_string(fit.x_grid.size()),
            std::to_string(fit.x_grid.size() - fit.excluded.size()), number(fit.slope), number(fit.intercept),
            number(fit.r_squared), number(fit.predicted_slope), excluded}}};
}

Table exponent_grid_table(const ExponentFit& fit) {
  Table t{{"x", "p_k", "budget", "excluded"}, {}};
  for (std::size_t i = 0; i < fit.x_grid.size(); ++i) {
    const bool ex = std::find(fit.excluded.begin(), fit.excluded.end(), fit.x_grid[i]) != fit.excluded.end();
    t.rows.push_back({number(fit.x_grid[i]), number(fit.values[i]), number(fit.budgets[i]), boolean(ex)});
  }
  return t;
}

Table pk_table(const std::vector<std::pair<std::string, TermBreakdown>>& rows, double k, double x) {
  Table t{{"k", "x", "route", "value", "truncation_estimate", "terms_used", "flagged"}, {}};
  for (const auto& [route, b] : rows) {
    t.rows.push_back({number(k), number(x), route, number(b.value), number(b.truncation_estimate),
                      std::to_string(b.terms_used), boolean(b.flagged)});
  }
  return t;
}

Table zero_table(const std::vector<ZeroRecord>& records) {
  Table t{{"index", "gamma", "residual", "conditioning", "zeta_prime_re", "zeta_prime_im"}, {}};
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ZeroRecord& r = records[i];
    t.rows.push_back({std::to_string(i + 1), number(r.gamma), number(r.residual), number(r.conditioning),
                      number(r.zeta_prime.real()), number(r.zeta_prime.imag())});
  }
  return t;
}

}  // namespace riesz::csv
