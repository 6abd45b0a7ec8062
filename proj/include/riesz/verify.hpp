#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "riesz/series.hpp"

namespace riesz {

struct ResidualReport {
  double k = 0.0;
  double x = 0.0;
  double lhs = 0.0;
  double main_term = 0.0;
  double zero_sum = 0.0;
  double residual = 0.0;  // lhs - main_term - zero_sum
  double budget = 0.0;    // sum of the truncation estimates
  bool pass = false;      // |residual| <= max(tol, budget)
  std::string route;      // "power" or "direct"
  double lhs_estimate = 0.0;
  double main_estimate = 0.0;
  double zero_estimate = 0.0;
  double tol = 0.0;
  std::size_t num_zeros = 0;
};

// lhs from the power series when x <= 30, otherwise from the tail-corrected
// direct series with params.direct_terms. Only the first params.num_zeros
// records are used; groups must index into that prefix.
ResidualReport identity_residual(const EvalParams& params, const std::vector<ZeroRecord>& records,
                                 const std::vector<BracketGroup>& groups);

// P_k(x) by the same route choice as identity_residual.
TermBreakdown pk_reference(double k, double x, std::size_t direct_terms);

struct HardyLittlewoodReport {
  double x = 0.0;
  double lhs = 0.0;
  double main_term = 0.0;  // sqrt(pi/x) sum mu/n (e^{-pi^2/(n^2 x)} - 1)
  double zero_sum = 0.0;   // -(1/(2 sqrt pi)) sum (pi/sqrt x)^rho Gamma((1-rho)/2)/zeta'(rho)
  double residual = 0.0;
  double budget = 0.0;
  bool pass = false;       // |residual| <= tol + budget

  // Differences against identity_residual at k = 1.
  double lhs_diff = 0.0;
  double main_diff = 0.0;
  double zero_diff = 0.0;
  bool matches_identity = false;  // all three <= 1e-10

  // alpha = sqrt(x), beta = pi/alpha:
  // sqrt(alpha) P_1(alpha^2) - sqrt(beta) P_1(beta^2)
  //   = -(1/(2 sqrt beta)) sum Gamma((1-rho)/2) beta^rho / zeta'(rho).
  double alpha = 0.0;
  double beta = 0.0;
  double symmetric_lhs = 0.0;
  double symmetric_rhs = 0.0;
  double symmetric_residual = 0.0;
  double symmetric_budget = 0.0;
  bool symmetric_pass = false;
};

HardyLittlewoodReport hardy_littlewood_check(double x, std::size_t n_terms, const std::vector<ZeroRecord>& records,
                                             double tol = 1e-6);

struct RamanujanReport {
  double x = 0.0;
  double left = 0.0;             // sum mu/n e^{-x/n^2}
  double right = 0.0;            // sqrt(pi/x) sum mu/n e^{-pi^2/(n^2 x)}
  double gap = 0.0;              // left - right
  double zero_correction = 0.0;  // the zero sum that closes the gap
  double budget = 0.0;
  bool gap_matches_correction = false;  // |gap - zero_correction| <= budget
  bool falsified = false;               // |gap| > 10 budget
};

// Requires x in [0.5, 20].
RamanujanReport ramanujan_falsification(double x, std::size_t n_terms, const std::vector<ZeroRecord>& records);

struct MellinReport {
  double k = 0.0;
  Complex s{};
  double x_max = 0.0;
  Complex head{};      // int_0^1, term-wise
  Complex body{};      // int_1^{x_max}, adaptive Gauss-Kronrod in log x
  Complex tail{};      // int_{x_max}^inf from the large-x expansion
  Complex integral{};  // head + body + tail
  Complex exact{};     // Gamma(-s)/zeta(2s+k)
  double rel_error = 0.0;      // with tail
  double rel_error_raw = 0.0;  // without tail
  double tail_estimate = 0.0;  // |tail|
  double quad_error = 0.0;     // summed |K15 - G7|
  std::size_t panels = 0;
};

// Requires (1-k)/2 < Re s < 1 (DomainError), |s| > 1e-3 (InvalidArgument)
// and x_max >= 1e3.
MellinReport mellin_check(double k, Complex s, double x_max, const std::vector<ZeroRecord>& records,
                          std::size_t n_terms = 20'000);

struct ExponentFit {
  double k = 0.0;
  std::vector<double> x_grid;
  std::vector<double> values;
  std::vector<double> budgets;
  std::vector<double> excluded;  // grid points with |P_k| < 10 budget
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double predicted_slope = 0.0;  // 1/4 - k/2
};

// Least-squares slope of log|P_k| against log x on a log-spaced grid.
// Requires points >= 8 and x_max/x_min >= 100; throws InsufficientSignal
// when fewer than 5 points survive exclusion.
ExponentFit exponent_fit(double k, double x_min, double x_max, std::size_t points,
                         std::size_t n_terms = 1'000'000);

}  // namespace riesz
