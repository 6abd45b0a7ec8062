#include "riesz/series.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"
#include "riesz/summation.hpp"
#include "riesz/zeta.hpp"

namespace riesz {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxTailOrder = 40;

void check_k_x(double k, double x, const char* who) {
  if (!(k >= 1.0) || !std::isfinite(k)) throw InvalidArgument(std::string(who) + ": k must be a finite real >= 1");
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument(std::string(who) + ": x must be a finite positive real");
}

void check_terms(std::size_t n_terms, const MobiusTable& table, const char* who) {
  if (n_terms == 0) throw InvalidArgument(std::string(who) + ": n_terms must be positive");
  if (n_terms > table.n_max()) {
    throw InvalidArgument(std::string(who) + ": n_terms exceeds the Moebius table bound");
  }
}

// 1/zeta(s) - 1, with 1/zeta(1) = 0.
double inv_zeta_minus_one(double s) {
  if (s == 1.0) return -1.0;
  const double z = zeta_minus_one_real(s);
  return -z / (1.0 + z);
}

struct TailSums {
  CompensatedSum<double> head;
  std::array<CompensatedSum<double>, kMaxTailOrder> partial{};  // sum_{2<=n<=N} mu n^{-k-2j}

  void merge(const TailSums& other) {
    head.merge(other.head);
    for (std::size_t j = 0; j < kMaxTailOrder; ++j) partial[j].merge(other.partial[j]);
  }
};

double log_factorial(std::size_t j) { return std::lgamma(static_cast<double>(j) + 1.0); }

}  // namespace

void EvalParams::validate() const {
  check_k_x(k, x, "EvalParams");
  if (!(tol > 0.0)) throw InvalidArgument("EvalParams: tol must be positive");
  if (n_terms == 0 || direct_terms == 0) throw InvalidArgument("EvalParams: term counts must be positive");
  if (!(a0 > 0.0)) throw InvalidArgument("EvalParams: A0 must be positive");
}

std::shared_ptr<const MobiusTable> shared_mobius(std::size_t n) {
  static std::mutex mutex;
  static std::shared_ptr<const MobiusTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->n_max() < n) table = sieve_mobius(n);
  return table;
}

TermBreakdown pk_direct(double k, double x, std::size_t n_terms, const MobiusTable& table, double tol) {
  check_k_x(k, x, "pk_direct");
  check_terms(n_terms, table, "pk_direct");
  const auto sum = block_reduce<CompensatedSum<double>>(1, n_terms, [&](std::size_t n, CompensatedSum<double>& acc) {
    const int mu = table[n];
    if (mu == 0) return;
    const double dn = static_cast<double>(n);
    acc.add(mu * std::exp(-k * std::log(dn) - x / (dn * dn)));
  });
  TermBreakdown out;
  out.value = sum.value();
  out.terms_used = n_terms;
  const double big_n = static_cast<double>(n_terms);
  if (k > 1.0) {
    out.truncation_estimate = std::pow(big_n, 1.0 - k) / (k - 1.0);
  } else {
    out.truncation_estimate = 1.0 / std::sqrt(big_n);
    out.flagged = out.truncation_estimate > tol;
  }
  return out;
}

TermBreakdown pk_direct_tail_corrected(double k, double x, std::size_t n_terms, const MobiusTable& table) {
  check_k_x(k, x, "pk_direct_tail_corrected");
  check_terms(n_terms, table, "pk_direct_tail_corrected");
  const double big_n = static_cast<double>(n_terms);
  const double log_n = std::log(big_n);
  const double log_x = std::log(x);

  // Remainder after J orders: x^J/J! sum_{n>N} n^{-k-2J} <= x^J/J! N^{1-k-2J}/(k+2J-1).
  // Rounding of order j: eps x^j/j! 2^{-k-2j}, the size of 1/zeta(k+2j) - 1.
  auto remainder = [&](std::size_t order) {
    const double s = k + 2.0 * static_cast<double>(order);
    if (s <= 1.0) return std::numeric_limits<double>::infinity();
    return std::exp(static_cast<double>(order) * log_x - log_factorial(order) + (1.0 - s) * log_n) / (s - 1.0);
  };
  auto rounding = [&](std::size_t order) {
    const double s = k + 2.0 * static_cast<double>(order);
    return 8.0 * kEps * std::exp(static_cast<double>(order) * log_x - log_factorial(order) - s * std::log(2.0));
  };
  std::size_t orders = 0;
  double best = remainder(0);
  double rounding_acc = 0.0;
  for (std::size_t j = 1; j < kMaxTailOrder; ++j) {
    rounding_acc += rounding(j - 1);
    const double cost = remainder(j) + rounding_acc;
    if (cost < best) {
      best = cost;
      orders = j;
    }
  }

  const auto sums = block_reduce<TailSums>(1, n_terms, [&](std::size_t n, TailSums& acc) {
    const int mu = table[n];
    if (mu == 0) return;
    const double dn = static_cast<double>(n);
    const double base = std::exp(-k * std::log(dn));
    acc.head.add(mu * base * std::exp(-x / (dn * dn)));
    if (n == 1) return;
    const double inv2 = 1.0 / (dn * dn);
    double p = base;
    for (std::size_t j = 0; j < orders; ++j) {
      acc.partial[j].add(mu * p);
      p *= inv2;
    }
  });

  CompensatedSum<double> total;
  total.add(sums.head.value());
  double coeff_log = 0.0;  // log(x^j / j!)
  for (std::size_t j = 0; j < orders; ++j) {
    if (j > 0) coeff_log += log_x - std::log(static_cast<double>(j));
    const double tail = inv_zeta_minus_one(k + 2.0 * static_cast<double>(j)) - sums.partial[j].value();
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    total.add(sign * std::exp(coeff_log) * tail);
  }

  TermBreakdown out;
  out.value = total.value();
  out.terms_used = n_terms;
  out.truncation_estimate = best + 4.0 * kEps * std::abs(sums.head.value()) + kEps * std::log(big_n + 1.0);
  return out;
}

TermBreakdown pk_power_series(double k, double x, double tol) {
  if (!(k >= 1.0) || !std::isfinite(k)) throw InvalidArgument("pk_power_series: k must be a finite real >= 1");
  if (!(x >= 0.0)) throw InvalidArgument("pk_power_series: x must be non-negative");
  if (x > 30.0) throw OutOfRange("pk_power_series: x > 30 is outside the validated range");
  if (!(tol > 0.0)) throw InvalidArgument("pk_power_series: tol must be positive");

  const bool k_is_one = (k == 1.0);
  const double stop = tol * std::ldexp(1.0, -20);
  CompensatedSum<double> acc(k_is_one ? std::expm1(-x) : std::exp(-x));
  double abs_total = std::exp(-x) + (k_is_one ? 1.0 : 0.0);
  double power = 1.0;  // (-x)^m / m!
  double last = 0.0;
  std::size_t m = 0;
  for (; m < 1000; ++m) {
    if (m > 0) power *= -x / static_cast<double>(m);
    if (k_is_one && m == 0) continue;
    const double term = power * inv_zeta_minus_one(k + 2.0 * static_cast<double>(m));
    acc.add(term);
    abs_total += std::abs(term);
    last = std::abs(term);
    if (static_cast<double>(m) > x && last < stop) break;
  }
  TermBreakdown out;
  out.value = acc.value();
  out.terms_used = m + 1;
  out.truncation_estimate = last + 4.0 * kEps * abs_total;
  return out;
}

TermBreakdown main_term(double k, double x, std::size_t n_terms, const MobiusTable& table) {
  check_k_x(k, x, "main_term");
  check_terms(n_terms, table, "main_term");
  const double a = 0.5 * k;
  const double scale = kPi * kPi / x;
  const auto sum = block_reduce<CompensatedSum<double>>(1, n_terms, [&](std::size_t n, CompensatedSum<double>& acc) {
    const int mu = table[n];
    if (mu == 0) return;
    const double dn = static_cast<double>(n);
    acc.add(mu / dn * hyp1f1_minus_one(a, 0.5, -scale / (dn * dn)));
  });
  const double prefactor = std::tgamma(a) * std::pow(x, -a);
  TermBreakdown out;
  out.value = prefactor * sum.value();
  out.terms_used = n_terms;
  const double big_n = static_cast<double>(n_terms);
  out.truncation_estimate = k * kPi * kPi * prefactor / x / (2.0 * big_n * big_n);
  return out;
}

TermBreakdown main_term_exponential(double x, std::size_t n_terms, const MobiusTable& table) {
  check_k_x(1.0, x, "main_term_exponential");
  check_terms(n_terms, table, "main_term_exponential");
  const double scale = kPi * kPi / x;
  const auto sum = block_reduce<CompensatedSum<double>>(1, n_terms, [&](std::size_t n, CompensatedSum<double>& acc) {
    const int mu = table[n];
    if (mu == 0) return;
    const double dn = static_cast<double>(n);
    acc.add(mu / dn * std::expm1(-scale / (dn * dn)));
  });
  TermBreakdown out;
  out.value = std::sqrt(kPi / x) * sum.value();
  out.terms_used = n_terms;
  const double big_n = static_cast<double>(n_terms);
  out.truncation_estimate = kPi * kPi * std::sqrt(kPi / x) / x / (2.0 * big_n * big_n);
  return out;
}

namespace {

template <class TermFn>
TermBreakdown paired_zero_sum(const std::vector<ZeroRecord>& records, const std::vector<BracketGroup>& groups,
                              double factor, TermFn&& log_term) {
  ComplexSum total;
  double magnitude = 0.0;
  double last_group = 0.0;
  std::size_t used = 0;
  for (const BracketGroup& group : groups) {
    ComplexSum group_sum;
    for (const std::size_t idx : group.member_indices) {
      if (idx >= records.size()) throw InvalidArgument("zero_sum: group index out of range");
      const ZeroRecord& rec = records[idx];
      if (!(rec.conditioning > kSimplicityMargin)) {
        throw SimplicityViolation("zero_sum: |zeta'(rho)| <= 1e-6 at gamma = " + std::to_string(rec.gamma));
      }
      const Complex rho(0.5, rec.gamma);
      const Complex t1 = std::exp(log_term(rho, rec.zeta_prime));
      const Complex t2 = std::exp(log_term(std::conj(rho), std::conj(rec.zeta_prime)));
      group_sum.add(t1 + t2);
      magnitude += std::abs(t1) + std::abs(t2);
      ++used;
    }
    const Complex g = group_sum.value();
    last_group = std::abs(factor * g);
    total.add(g);
  }
  const Complex value = factor * total.value();
  TermBreakdown out;
  out.value = value.real();
  out.imag_residue = value.imag();
  out.terms_used = used;
  out.truncation_estimate = last_group;
  if (std::abs(value.imag()) > 1e-12 * std::abs(factor) * magnitude + std::numeric_limits<double>::min()) {
    throw NumericalFailure("zero_sum: conjugate pairing left an imaginary residue");
  }
  return out;
}

}  // namespace

TermBreakdown zero_sum(double k, double x, const std::vector<ZeroRecord>& records,
                       const std::vector<BracketGroup>& groups) {
  check_k_x(k, x, "zero_sum");
  const double log_x = std::log(x);
  return paired_zero_sum(records, groups, 0.5, [&](Complex rho, Complex zp) {
    const Complex w = 0.5 * (k - rho);
    return log_gamma_complex(w) - std::log(zp) - w * log_x;
  });
}

TermBreakdown zero_sum_exponential_form(double x, const std::vector<ZeroRecord>& records,
                                        const std::vector<BracketGroup>& groups) {
  check_k_x(1.0, x, "zero_sum_exponential_form");
  const double log_base = std::log(kPi / std::sqrt(x));
  return paired_zero_sum(records, groups, -0.5 / std::sqrt(kPi), [&](Complex rho, Complex zp) {
    return rho * log_base + log_gamma_complex(0.5 * (1.0 - rho)) - std::log(zp);
  });
}

}  // namespace riesz
