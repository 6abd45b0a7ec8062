#pragma once

#include <complex>

namespace riesz {

// Complex binary64 value used for every s, rho and Gamma argument.
using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// sin(pi z) and cos(pi z) with exact zeros at the integers (resp. half
// integers) of the real part when Im z = 0.
double sin_pi(double x);
double cos_pi(double x);
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// Gamma(z) through a 14-term Lanczos sum (g = 671/128) plus reflection for
// Re z < 1/2. Throws PoleProximity within 1e-12 of a non-positive integer.
Complex gamma_complex(Complex z);

// Principal branch of log Gamma(z): the Stirling series on z + n, minus the
// logs of the shifted factors. Continuous along vertical lines off the
// negative real axis.
Complex log_gamma_complex(Complex z);

// psi(z) = Gamma'(z)/Gamma(z).
Complex digamma_complex(Complex z);

// sqrt(2 pi) |T|^(sigma - 1/2) exp(-pi |T| / 2). Oracle for |Gamma(sigma + iT)|;
// requires |T| >= 5.
double stirling_magnitude(double sigma, double t);

// Confluent hypergeometric 1F1(a; b; z) for real arguments.
//
// z > 0 sums the defining series. For z < 0 the Kummer transform
// e^z 1F1(b - a; b; -z) is used; when b - a is a non-positive integer that is
// a finite polynomial. For large |z| the algebraic asymptotic expansion
// Gamma(b)/Gamma(b-a) |z|^-a sum (a)_s (a-b+1)_s / (s! |z|^s) takes over once
// it converges and the exponentially small companion is negligible. Series
// are accumulated in extended precision and re-run in quad precision when the
// observed cancellation would cost more than ~6 digits.
double hyp1f1(double a, double b, double z);

// 1F1(a; b; z) - 1 without the cancellation of the leading unit term for
// small |z|.
double hyp1f1_minus_one(double a, double b, double z);

}  // namespace riesz
