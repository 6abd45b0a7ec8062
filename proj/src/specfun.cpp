#include "riesz/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

constexpr double kPoleTolerance = 1e-12;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Lanczos coefficients for g = 671/128 (Numerical Recipes, 3rd ed.).
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5,
};

// B_{2j} / (2j (2j - 1)) for j = 1..8.
constexpr std::array<double, 8> kStirlingLog = {
    1.0 / 12.0,   -1.0 / 360.0,         1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0,    1.0 / 156.0,  -3617.0 / 122400.0,
};

// B_{2j} / (2j) for j = 1..7.
constexpr std::array<double, 7> kStirlingPsi = {
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
};

void check_gamma_pole(Complex z, const char* who) {
  const double n = std::round(z.real());
  if (n <= 0.0 && std::abs(z - Complex(n, 0.0)) < kPoleTolerance) {
    throw PoleProximity(std::string(who) + ": argument within 1e-12 of pole " +
                            std::to_string(static_cast<long>(n)),
                        static_cast<long>(n));
  }
}

Complex lanczos_gamma(Complex z) {
  Complex y = z;
  const Complex t = z + 5.24218750000000000;
  const Complex exponent = (z + 0.5) * std::log(t) - t;
  Complex ser = 0.999999999999997092;
  for (const double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  return std::exp(exponent) * (2.5066282746310005 * ser / z);
}

Complex stirling_log_gamma(Complex w) {
  Complex result = (w - 0.5) * std::log(w) - w + kHalfLog2Pi;
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  for (const double c : kStirlingLog) {
    result += c * power;
    power *= inv2;
  }
  return result;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1.0 : -1.0;
}

template <class F>
F fabs_any(F x) {
  return x < 0 ? -x : x;
}

struct SeriesSum {
  long double value = 0;
  long double max_term = 0;
  bool converged = false;
};

// sum_{m >= first} (a)_m / (b)_m z^m / m!, in working type F. The stopping
// rule requires |term| < 2^-60 |sum| on three consecutive terms once the term
// ratio is past its peak (m > |a| and m > |z|).
template <class F>
SeriesSum kummer_series(double a, double b, double z, int first, long max_terms) {
  F term = 1;
  F sum = (first == 0) ? F(1) : F(0);
  F comp = 0;
  F max_term = (first == 0) ? F(1) : F(0);
  const F tiny = F(std::ldexp(1.0, -60));
  int small_run = 0;
  const F fa = a;
  const F fb = b;
  const F fz = z;
  for (long m = 0; m < max_terms; ++m) {
    term *= (fa + F(m)) / (fb + F(m)) * fz / F(m + 1);
    if (term == F(0)) return {static_cast<long double>(sum + comp), static_cast<long double>(max_term), true};
    const F t = sum + term;
    if (fabs_any(sum) >= fabs_any(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    const F mag = fabs_any(term);
    if (mag > max_term) max_term = mag;
    const bool past_peak = F(m + 1) > fabs_any(fa) && F(m + 1) > fabs_any(fz);
    if (past_peak && mag < tiny * fabs_any(sum + comp)) {
      if (++small_run >= 3) {
        return {static_cast<long double>(sum + comp), static_cast<long double>(max_term), true};
      }
    } else {
      small_run = 0;
    }
  }
  return {static_cast<long double>(sum + comp), static_cast<long double>(max_term), false};
}

// Series with cancellation monitoring: extended precision first, quad
// precision when more than ~6 digits of the extended result are at risk.
long double monitored_series(double a, double b, double z, int first) {
  constexpr long kMaxTerms = 200000;
  SeriesSum s = kummer_series<long double>(a, b, z, first, kMaxTerms);
  if (!s.converged) throw NumericalFailure("hyp1f1: series did not converge");
  const long double loss = s.value == 0 ? std::numeric_limits<long double>::infinity()
                                        : s.max_term / fabs_any(s.value);
  if (loss * std::numeric_limits<long double>::epsilon() > 1e-13L) {
    SeriesSum q = kummer_series<__float128>(a, b, z, first, kMaxTerms);
    if (!q.converged) throw NumericalFailure("hyp1f1: quad-precision series did not converge");
    return q.value;
  }
  return s.value;
}

// Finite Kummer polynomial when c = b - a is a non-positive integer:
// sum_{m=0}^{-c} (c)_m / (b)_m w^m / m!.
long double kummer_polynomial(double c, double b, double w) {
  const long degree = static_cast<long>(-c);
  __float128 term = 1;
  __float128 sum = 1;
  for (long m = 0; m < degree; ++m) {
    term *= (__float128(c) + m) / (__float128(b) + m) * __float128(w) / __float128(m + 1);
    sum += term;
  }
  return static_cast<long double>(sum);
}

// Algebraic expansion of 1F1(a; b; -w) for large w; returns false when it
// has not converged to working precision or the exponentially small
// companion is not negligible.
bool large_argument(double a, double b, double w, double& out) {
  const double c = b - a;
  const double log_main = std::lgamma(b) - std::lgamma(c) - a * std::log(w);
  if (a > 0.0) {
    const double log_sub = std::lgamma(b) - std::lgamma(a) - w + (a - b) * std::log(w);
    if (log_sub - log_main > std::log(1e-18)) return false;
  }
  long double term = 1;
  long double sum = 1;
  bool done = false;
  for (int s = 0; s < 5000; ++s) {
    const long double next = term * (a + s) * (a - b + 1 + s) / ((s + 1.0L) * w);
    if (fabs_any(next) > fabs_any(term) && s > 0) break;
    term = next;
    sum += term;
    if (fabs_any(term) < 1e-19L * fabs_any(sum)) {
      done = true;
      break;
    }
  }
  if (!done) return false;
  const double sign = gamma_sign(b) * gamma_sign(c);
  out = sign * static_cast<double>(std::exp(static_cast<long double>(log_main)) * sum);
  return true;
}

void check_hyp_args(double a, double b, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z)) {
    throw InvalidArgument("hyp1f1: non-finite argument");
  }
  if (is_nonpositive_integer(b)) {
    throw InvalidArgument("hyp1f1: b = " + std::to_string(b) + " is a non-positive integer");
  }
}

// Direct series is used when the very first term ratio is already small.
bool direct_region(double a, double b, double z) {
  return std::abs(z) * std::max(1.0, std::abs(a)) <= 0.25 * std::abs(b);
}

}  // namespace

double sin_pi(double x) {
  const double n = std::round(2.0 * x);
  const double r = x - 0.5 * n;  // |r| <= 1/4
  const long q = static_cast<long>(std::fmod(n, 4.0) + 4.0) % 4;
  const double arg = kPi * r;
  switch (q) {
    case 0: return r == 0.0 ? 0.0 : std::sin(arg);
    case 1: return std::cos(arg);
    case 2: return r == 0.0 ? 0.0 : -std::sin(arg);
    default: return -std::cos(arg);
  }
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

Complex sin_pi(Complex z) {
  const double y = kPi * z.imag();
  return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

Complex cos_pi(Complex z) {
  const double y = kPi * z.imag();
  return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

Complex gamma_complex(Complex z) {
  check_gamma_pole(z, "gamma_complex");
  if (z.real() < 0.5) {
    return kPi / (sin_pi(z) * lanczos_gamma(1.0 - z));
  }
  return lanczos_gamma(z);
}

Complex log_gamma_complex(Complex z) {
  check_gamma_pole(z, "log_gamma_complex");
  if (z.real() >= 0.5 && std::abs(z) >= 15.0) return stirling_log_gamma(z);
  const int shift = z.real() >= 15.0 ? 0 : static_cast<int>(std::ceil(15.0 - z.real()));
  Complex logs = 0.0;
  for (int j = 0; j < shift; ++j) logs += std::log(z + static_cast<double>(j));
  return stirling_log_gamma(z + static_cast<double>(shift)) - logs;
}

Complex digamma_complex(Complex z) {
  check_gamma_pole(z, "digamma_complex");
  Complex shifted = z;
  Complex acc = 0.0;
  while (shifted.real() < 15.0 && std::abs(shifted) < 20.0) {
    acc -= 1.0 / shifted;
    shifted += 1.0;
  }
  if (shifted.real() < 0.5) {
    // Reflection keeps the asymptotic series in the right half plane.
    return acc + digamma_complex(1.0 - shifted) - kPi * cos_pi(shifted) / sin_pi(shifted);
  }
  const Complex inv = 1.0 / shifted;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv2;
  for (const double c : kStirlingPsi) {
    series += c * power;
    power *= inv2;
  }
  return acc + std::log(shifted) - 0.5 * inv - series;
}

double stirling_magnitude(double sigma, double t) {
  const double at = std::abs(t);
  if (at < 5.0) throw OutOfRange("stirling_magnitude: |T| < 5 is outside the asymptotic range");
  return std::sqrt(2.0 * kPi) * std::pow(at, sigma - 0.5) * std::exp(-0.5 * kPi * at);
}

double hyp1f1(double a, double b, double z) {
  check_hyp_args(a, b, z);
  if (z == 0.0) return 1.0;
  if (a == b) return std::exp(z);
  if (z > 0.0 || is_nonpositive_integer(a) || direct_region(a, b, z)) {
    return static_cast<double>(monitored_series(a, b, z, 0));
  }
  const double w = -z;
  const double c = b - a;
  if (is_nonpositive_integer(c)) {
    const long double poly = kummer_polynomial(c, b, w);
    if (poly == 0) return 0.0;
    const long double mag = std::exp(-static_cast<long double>(w) + std::log(fabs_any(poly)));
    return static_cast<double>(poly < 0 ? -mag : mag);
  }
  double asym = 0.0;
  if (large_argument(a, b, w, asym)) return asym;
  if (w > 11000.0) throw NumericalFailure("hyp1f1: argument outside the implemented range");
  const long double s = monitored_series(c, b, w, 0);
  return static_cast<double>(std::exp(-static_cast<long double>(w)) * s);
}

double hyp1f1_minus_one(double a, double b, double z) {
  check_hyp_args(a, b, z);
  if (z == 0.0) return 0.0;
  if (a == b) return std::expm1(z);
  if (direct_region(a, b, z)) return static_cast<double>(monitored_series(a, b, z, 1));
  return hyp1f1(a, b, z) - 1.0;
}

}  // namespace riesz
