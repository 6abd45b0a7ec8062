#pragma once

#include <cstddef>

#include "riesz/specfun.hpp"

namespace riesz {

// Riemann zeta. Euler-Maclaurin with N = max(30, 2.5 |Im s|) direct terms and
// eight Bernoulli corrections for Re s >= -1/2; the functional equation
// zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s) below that.
// Throws PoleProximity within 1e-10 of s = 1.
Complex zeta_complex(Complex s);

// zeta'(s) by term-wise differentiation of the same Euler-Maclaurin sum, or
// of the functional equation for Re s < -1/2.
Complex zeta_derivative(Complex s);

// Euler-Maclaurin evaluation with an explicit number of direct terms (>= 2).
// Exposed for convergence audits.
Complex zeta_euler_maclaurin(Complex s, std::size_t direct_terms);

// Real-axis fast path for arguments > 1; throws DomainError otherwise.
// Beyond 40 the value is 1 + 2^-x + 3^-x.
double zeta_real_at(double x);

// zeta(x) - 1 to full relative precision for x > 1 (the subtraction of the
// n = 1 term is never performed numerically).
double zeta_minus_one_real(double x);

}  // namespace riesz
