#pragma once

#include <cstddef>
#include <vector>

#include "riesz/arith.hpp"
#include "riesz/zeros.hpp"

namespace riesz {

struct EvalParams {
  double k = 2.0;
  double x = 1.0;
  std::size_t n_terms = 100'000;       // main term
  std::size_t direct_terms = 1'000'000;  // direct series
  std::size_t num_zeros = 50;
  double tol = 1e-6;
  double a0 = kDefaultA0;

  // Throws InvalidArgument unless k >= 1, x > 0, tol > 0 and both term
  // counts are positive.
  void validate() const;
};

struct TermBreakdown {
  double value = 0.0;
  double truncation_estimate = 0.0;
  std::size_t terms_used = 0;
  // Set when a heuristic (not a bound) estimate exceeds the requested tol.
  bool flagged = false;
  // Pre-projection imaginary part (zero sums only).
  double imag_residue = 0.0;
};

// sum_{n <= n_terms} mu(n) n^-k e^{-x/n^2}. The estimate is n_terms^{1-k}/(k-1)
// for k > 1 and the heuristic n_terms^{-1/2} for k = 1, flagged when it
// exceeds tol.
TermBreakdown pk_direct(double k, double x, std::size_t n_terms, const MobiusTable& table,
                        double tol = 1e-6);

// Direct sum plus a Taylor expansion of the discarded tail,
//   sum_{j<J} (-x)^j/j! [1/zeta(k+2j) - sum_{n<=N} mu(n) n^{-k-2j}],
// with J chosen to minimise remainder plus rounding; 1/zeta(1) = 0.
TermBreakdown pk_direct_tail_corrected(double k, double x, std::size_t n_terms, const MobiusTable& table);

// sum_m (-x)^m / (m! zeta(k+2m)) (m from 1 when k = 1), summed as
//   e^{-x} + sum_m (-x)^m/m! (1/zeta(k+2m) - 1)
// so that terms shrink like (x/4)^m/m!. Requires 0 <= x <= 30.
TermBreakdown pk_power_series(double k, double x, double tol = 1e-12);

// Gamma(k/2) x^{-k/2} sum_{n <= n_terms} mu(n)/n [1F1(k/2; 1/2; -pi^2/(n^2 x)) - 1].
TermBreakdown main_term(double k, double x, std::size_t n_terms, const MobiusTable& table);

// k = 1 main term through exponentials only:
// sqrt(pi/x) sum mu(n)/n (e^{-pi^2/(n^2 x)} - 1).
TermBreakdown main_term_exponential(double x, std::size_t n_terms, const MobiusTable& table);

// (1/2) sum over groups, each rho with its conjugate, of
// Gamma((k-rho)/2)/zeta'(rho) x^{-(k-rho)/2}, assembled in log space.
TermBreakdown zero_sum(double k, double x, const std::vector<ZeroRecord>& records,
                       const std::vector<BracketGroup>& groups);

// -(1/(2 sqrt(pi))) sum_rho (pi/sqrt(x))^rho Gamma((1-rho)/2)/zeta'(rho).
TermBreakdown zero_sum_exponential_form(double x, const std::vector<ZeroRecord>& records,
                                        const std::vector<BracketGroup>& groups);

// Shared Moebius table covering at least n entries; grows on demand.
std::shared_ptr<const MobiusTable> shared_mobius(std::size_t n);

}  // namespace riesz
