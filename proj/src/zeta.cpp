#include "riesz/zeta.hpp"

#include <array>
#include <cmath>
#include <string>

#include "riesz/errors.hpp"
#include "riesz/summation.hpp"

namespace riesz {

namespace {

// B_{2j} / (2j)! for j = 1..8.
constexpr std::array<double, 8> kEulerMaclaurin = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

constexpr double kLog2 = 0.69314718055994530941723212145818;
constexpr double kLogPi = 1.14472988584940017414342735135305;

void check_zeta_pole(Complex s, const char* who) {
  if (std::abs(s - 1.0) < 1e-10) {
    throw PoleProximity(std::string(who) + ": argument within 1e-10 of the pole at s = 1", 1);
  }
}

std::size_t default_terms(Complex s) {
  const double n = std::ceil(2.5 * std::abs(s.imag()));
  return static_cast<std::size_t>(std::max(30.0, n));
}

struct EulerMaclaurin {
  Complex value;
  Complex derivative;
};

EulerMaclaurin euler_maclaurin(Complex s, std::size_t n_terms, bool with_derivative) {
  ComplexSum value;
  ComplexSum deriv;
  for (std::size_t n = 1; n < n_terms; ++n) {
    const double log_n = std::log(static_cast<double>(n));
    const Complex term = std::exp(-s * log_n);
    value.add(term);
    if (with_derivative) deriv.add(-log_n * term);
  }
  const double big_n = static_cast<double>(n_terms);
  const double log_big = std::log(big_n);
  const Complex n_pow = std::exp(-s * log_big);  // N^-s
  const Complex sm1 = s - 1.0;

  value.add(n_pow * big_n / sm1);
  value.add(0.5 * n_pow);
  if (with_derivative) {
    deriv.add(-log_big * n_pow * big_n / sm1 - n_pow * big_n / (sm1 * sm1));
    deriv.add(-0.5 * log_big * n_pow);
  }

  // Corrections B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}.
  Complex rising = s;        // (s)_{2j-1}
  Complex rising_d = 1.0;    // d/ds (s)_{2j-1}
  Complex power = n_pow / big_n;
  const double inv_n2 = 1.0 / (big_n * big_n);
  for (std::size_t j = 0; j < kEulerMaclaurin.size(); ++j) {
    const double c = kEulerMaclaurin[j];
    value.add(c * rising * power);
    if (with_derivative) deriv.add(c * (rising_d - log_big * rising) * power);
    const double i1 = static_cast<double>(2 * j + 1);
    const double i2 = static_cast<double>(2 * j + 2);
    rising_d = rising_d * (s + i1) + rising;
    rising *= (s + i1);
    rising_d = rising_d * (s + i2) + rising;
    rising *= (s + i2);
    power *= inv_n2;
  }
  return {value.value(), deriv.value()};
}

// 2^s pi^(s-1) Gamma(1-s), assembled in log space.
Complex reflection_factor(Complex s) {
  return std::exp(s * kLog2 + (s - 1.0) * kLogPi + log_gamma_complex(1.0 - s));
}

}  // namespace

Complex zeta_euler_maclaurin(Complex s, std::size_t direct_terms) {
  check_zeta_pole(s, "zeta_euler_maclaurin");
  if (direct_terms < 2) throw InvalidArgument("zeta_euler_maclaurin: need at least 2 terms");
  return euler_maclaurin(s, direct_terms, false).value;
}

Complex zeta_complex(Complex s) {
  check_zeta_pole(s, "zeta_complex");
  if (s.real() < -0.5) {
    const Complex mirror = 1.0 - s;
    return reflection_factor(s) * sin_pi(0.5 * s) * zeta_complex(mirror);
  }
  return euler_maclaurin(s, default_terms(s), false).value;
}

Complex zeta_derivative(Complex s) {
  check_zeta_pole(s, "zeta_derivative");
  if (s.real() < -0.5) {
    // zeta(s) = chi(s) zeta(1-s) with chi(s) = A(s) sin(pi s/2),
    // A'(s)/A(s) = log(2 pi) - psi(1-s).
    const Complex mirror = 1.0 - s;
    const Complex z1 = zeta_complex(mirror);
    const Complex dz1 = zeta_derivative(mirror);
    const Complex sn = sin_pi(0.5 * s);
    const Complex cs = cos_pi(0.5 * s);
    const Complex log_deriv = kLog2 + kLogPi - digamma_complex(mirror);
    return reflection_factor(s) * (log_deriv * sn * z1 + 0.5 * kPi * cs * z1 - sn * dz1);
  }
  return euler_maclaurin(s, default_terms(s), true).derivative;
}

double zeta_minus_one_real(double x) {
  if (!(x > 1.0)) throw DomainError("zeta_minus_one_real: argument must exceed 1");
  if (x > 40.0) {
    long double sum = 0;
    for (int n = 2; n < 64; ++n) {
      const long double term = std::pow(static_cast<long double>(n), -static_cast<long double>(x));
      sum += term;
      if (term < 1e-21L * sum) break;
    }
    return static_cast<double>(sum);
  }
  constexpr int kDirect = 12;
  CompensatedSum<long double> acc;
  for (int n = 2; n < kDirect; ++n) acc.add(std::pow(static_cast<long double>(n), -static_cast<long double>(x)));
  const long double big_n = kDirect;
  const long double n_pow = std::pow(big_n, -static_cast<long double>(x));
  acc.add(n_pow * big_n / (x - 1.0L));
  acc.add(0.5L * n_pow);
  long double rising = x;
  long double power = n_pow / big_n;
  for (std::size_t j = 0; j < kEulerMaclaurin.size(); ++j) {
    acc.add(kEulerMaclaurin[j] * rising * power);
    rising *= (x + 2.0L * j + 1.0L) * (x + 2.0L * j + 2.0L);
    power /= big_n * big_n;
  }
  return static_cast<double>(acc.value());
}

double zeta_real_at(double x) {
  if (!(x > 1.0)) throw DomainError("zeta_real_at: argument must exceed 1");
  if (x > 40.0) return 1.0 + std::exp2(-x) + std::pow(3.0, -x);
  return 1.0 + zeta_minus_one_real(x);
}

}  // namespace riesz
