#include "riesz/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"
#include "riesz/summation.hpp"
#include "riesz/zeta.hpp"

namespace riesz {

namespace {

constexpr double kPowerSeriesCap = 30.0;

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1]; index 7 is the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

constexpr double kPanelTolerance = 1e-10;
constexpr std::size_t kPanelBudget = 10'000;

struct PanelResult {
  Complex kronrod;
  double error;
};

template <class F>
PanelResult gauss_kronrod(F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const Complex fc = f(mid);
  Complex k15 = kWgk[7] * fc;
  Complex g7 = kWg[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const Complex f1 = f(mid - half * kXgk[j]);
    const Complex f2 = f(mid + half * kXgk[j]);
    k15 += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) g7 += kWg[j / 2] * (f1 + f2);
  }
  return {half * k15, std::abs(half * (k15 - g7))};
}

// Adaptive bisection with a fixed panel budget, depth-first from the left.
template <class F>
Complex adaptive_integral(F&& f, const std::vector<double>& breaks, double& error, std::size_t& panels) {
  struct Pending {
    double a;
    double b;
  };
  ComplexSum total;
  error = 0.0;
  panels = 0;
  std::vector<Pending> stack;
  for (std::size_t i = breaks.size() - 1; i > 0; --i) stack.push_back({breaks[i - 1], breaks[i]});
  while (!stack.empty()) {
    const Pending p = stack.back();
    stack.pop_back();
    const PanelResult r = gauss_kronrod(f, p.a, p.b);
    ++panels;
    if (panels > kPanelBudget) throw NumericalFailure("mellin_check: panel budget of 1e4 exhausted");
    if (r.error <= kPanelTolerance || p.b - p.a < 1e-9) {
      total.add(r.kronrod);
      error += r.error;
      continue;
    }
    const double mid = 0.5 * (p.a + p.b);
    stack.push_back({mid, p.b});
    stack.push_back({p.a, mid});
  }
  return total.value();
}

double rising(double a, std::size_t j) {
  double r = 1.0;
  for (std::size_t i = 0; i < j; ++i) r *= a + static_cast<double>(i);
  return r;
}

}  // namespace

TermBreakdown pk_reference(double k, double x, std::size_t direct_terms) {
  if (x <= kPowerSeriesCap) return pk_power_series(k, x);
  return pk_direct_tail_corrected(k, x, direct_terms, *shared_mobius(direct_terms));
}

ResidualReport identity_residual(const EvalParams& params, const std::vector<ZeroRecord>& records,
                                 const std::vector<BracketGroup>& groups) {
  params.validate();
  if (params.num_zeros > records.size()) {
    throw InvalidArgument("identity_residual: requested " + std::to_string(params.num_zeros) +
                          " zeros but only " + std::to_string(records.size()) + " are available");
  }
  const std::vector<ZeroRecord> used(records.begin(), records.begin() + static_cast<std::ptrdiff_t>(params.num_zeros));
  for (const BracketGroup& g : groups) {
    for (const std::size_t idx : g.member_indices) {
      if (idx >= used.size()) throw InvalidArgument("identity_residual: bracket group indexes past num_zeros");
    }
  }
  const bool power = params.x <= kPowerSeriesCap;
  const std::size_t table_size = std::max(params.n_terms, power ? std::size_t{1} : params.direct_terms);
  const auto table = shared_mobius(table_size);

  const TermBreakdown lhs = power ? pk_power_series(params.k, params.x)
                                  : pk_direct_tail_corrected(params.k, params.x, params.direct_terms, *table);
  const TermBreakdown main = main_term(params.k, params.x, params.n_terms, *table);
  const TermBreakdown zs = zero_sum(params.k, params.x, used, groups);

  ResidualReport r;
  r.k = params.k;
  r.x = params.x;
  r.lhs = lhs.value;
  r.main_term = main.value;
  r.zero_sum = zs.value;
  r.residual = r.lhs - r.main_term - r.zero_sum;
  r.lhs_estimate = lhs.truncation_estimate;
  r.main_estimate = main.truncation_estimate;
  r.zero_estimate = zs.truncation_estimate;
  r.budget = r.lhs_estimate + r.main_estimate + r.zero_estimate;
  r.tol = params.tol;
  r.pass = std::abs(r.residual) <= std::max(params.tol, r.budget);
  r.route = power ? "power" : "direct";
  r.num_zeros = params.num_zeros;
  return r;
}

HardyLittlewoodReport hardy_littlewood_check(double x, std::size_t n_terms, const std::vector<ZeroRecord>& records,
                                             double tol) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("hardy_littlewood_check: x must be positive");
  const auto table = shared_mobius(std::max<std::size_t>(n_terms, 1'000'000));
  const auto groups = singleton_groups(records.size());
  constexpr std::size_t kDirect = 1'000'000;

  const TermBreakdown lhs = pk_reference(1.0, x, kDirect);
  const TermBreakdown main = main_term_exponential(x, n_terms, *table);
  const TermBreakdown zs = zero_sum_exponential_form(x, records, groups);

  HardyLittlewoodReport r;
  r.x = x;
  r.lhs = lhs.value;
  r.main_term = main.value;
  r.zero_sum = zs.value;
  r.residual = r.lhs - r.main_term - r.zero_sum;
  r.budget = lhs.truncation_estimate + main.truncation_estimate + zs.truncation_estimate;
  r.pass = std::abs(r.residual) <= tol + r.budget;

  EvalParams params;
  params.k = 1.0;
  params.x = x;
  params.n_terms = n_terms;
  params.direct_terms = kDirect;
  params.num_zeros = records.size();
  params.tol = tol;
  const ResidualReport id = identity_residual(params, records, groups);
  r.lhs_diff = std::abs(r.lhs - id.lhs);
  r.main_diff = std::abs(r.main_term - id.main_term);
  r.zero_diff = std::abs(r.zero_sum - id.zero_sum);
  r.matches_identity = r.lhs_diff <= 1e-10 && r.main_diff <= 1e-10 && r.zero_diff <= 1e-10;

  r.alpha = std::sqrt(x);
  r.beta = kPi / r.alpha;
  const TermBreakdown dual = pk_reference(1.0, r.beta * r.beta, kDirect);
  r.symmetric_lhs = std::sqrt(r.alpha) * lhs.value - std::sqrt(r.beta) * dual.value;
  r.symmetric_rhs = std::sqrt(r.alpha) * zs.value;
  r.symmetric_residual = r.symmetric_lhs - r.symmetric_rhs;
  r.symmetric_budget = std::sqrt(r.alpha) * (lhs.truncation_estimate + zs.truncation_estimate) +
                       std::sqrt(r.beta) * dual.truncation_estimate;
  r.symmetric_pass = std::abs(r.symmetric_residual) <= tol + r.symmetric_budget;
  return r;
}

RamanujanReport ramanujan_falsification(double x, std::size_t n_terms, const std::vector<ZeroRecord>& records) {
  if (!(x >= 0.5 && x <= 20.0)) throw OutOfRange("ramanujan_falsification: x must lie in [0.5, 20]");
  const auto table = shared_mobius(n_terms);
  const TermBreakdown left = pk_power_series(1.0, x);
  const TermBreakdown right = main_term_exponential(x, n_terms, *table);
  const TermBreakdown zs = zero_sum_exponential_form(x, records, singleton_groups(records.size()));
  RamanujanReport r;
  r.x = x;
  r.left = left.value;
  r.right = right.value;
  r.gap = r.left - r.right;
  r.zero_correction = zs.value;
  r.budget = left.truncation_estimate + right.truncation_estimate + zs.truncation_estimate;
  r.gap_matches_correction = std::abs(r.gap - r.zero_correction) <= r.budget;
  r.falsified = std::abs(r.gap) > 10.0 * r.budget;
  return r;
}

MellinReport mellin_check(double k, Complex s, double x_max, const std::vector<ZeroRecord>& records,
                          std::size_t n_terms) {
  if (!(k >= 1.0) || !std::isfinite(k)) throw InvalidArgument("mellin_check: k must be a finite real >= 1");
  if (!(x_max >= 1e3) || !std::isfinite(x_max)) throw InvalidArgument("mellin_check: x_max must be at least 1e3");
  if (std::abs(s) <= 1e-3) throw InvalidArgument("mellin_check: s = 0 is an excluded point");
  if (!(s.real() > 0.5 * (1.0 - k) && s.real() < 1.0)) {
    throw DomainError("mellin_check: Re s must lie in ((1-k)/2, 1)");
  }
  const auto table = shared_mobius(n_terms);

  MellinReport r;
  r.k = k;
  r.s = s;
  r.x_max = x_max;

  // int_0^1 x^{m-s-1} dx = 1/(m-s), continued analytically.
  {
    ComplexSum head;
    double coeff = 1.0;  // 1/m!
    for (std::size_t m = 0; m < 200; ++m) {
      if (m > 0) coeff /= static_cast<double>(m);
      const double arg = k + 2.0 * static_cast<double>(m);
      if (arg == 1.0) continue;
      const double c = ((m % 2 == 0) ? coeff : -coeff) / zeta_real_at(arg);
      head.add(c / (static_cast<double>(m) - s));
      if (m > 4 && coeff < 1e-22) break;
    }
    r.head = head.value();
  }

  // int_1^{x_max} x^{-s} P_k(x) du with x = e^u.
  {
    const double u_max = std::log(x_max);
    const double u_cap = std::log(kPowerSeriesCap);
    std::vector<double> breaks;
    constexpr int kInitial = 8;
    for (int i = 0; i <= kInitial; ++i) breaks.push_back(u_cap * i / kInitial);
    for (int i = 1; i <= kInitial; ++i) breaks.push_back(u_cap + (u_max - u_cap) * i / kInitial);
    auto integrand = [&](double u) {
      const double x = std::exp(u);
      const double p = x <= kPowerSeriesCap ? pk_power_series(k, x).value
                                            : pk_direct_tail_corrected(k, x, n_terms, *table).value;
      return std::exp(-s * u) * p;
    };
    r.body = adaptive_integral(integrand, breaks, r.quad_error, r.panels);
  }

  // Beyond x_max: main-term expansion in powers of 1/x plus the zero terms.
  {
    const double log_x = std::log(x_max);
    ComplexSum tail;
    const double a = 0.5 * k;
    const double gamma_a = std::tgamma(a);
    double scale = 1.0;  // (-pi^2)^j / j!
    for (std::size_t j = 1; j < 200; ++j) {
      scale *= -kPi * kPi / static_cast<double>(j);
      const double coeff = gamma_a * rising(a, j) / rising(0.5, j) * scale / zeta_real_at(2.0 * j + 1.0);
      const Complex e = s + a + static_cast<double>(j);
      const Complex term = coeff * std::exp(-e * log_x) / e;
      tail.add(term);
      if (std::abs(term) < 1e-22 && j > 2) break;
    }
    for (const ZeroRecord& rec : records) {
      for (const bool conj : {false, true}) {
        const Complex rho = conj ? Complex(0.5, -rec.gamma) : Complex(0.5, rec.gamma);
        const Complex zp = conj ? std::conj(rec.zeta_prime) : rec.zeta_prime;
        const Complex w = 0.5 * (k - rho);
        const Complex e = s + w;
        tail.add(0.5 * std::exp(log_gamma_complex(w) - std::log(zp) - e * log_x) / e);
      }
    }
    r.tail = tail.value();
  }

  r.exact = gamma_complex(-s) / zeta_complex(2.0 * s + k);
  r.integral = r.head + r.body + r.tail;
  r.rel_error = std::abs(r.integral - r.exact) / std::abs(r.exact);
  r.rel_error_raw = std::abs(r.head + r.body - r.exact) / std::abs(r.exact);
  r.tail_estimate = std::abs(r.tail);
  return r;
}

ExponentFit exponent_fit(double k, double x_min, double x_max, std::size_t points, std::size_t n_terms) {
  if (!(k >= 1.0) || !std::isfinite(k)) throw InvalidArgument("exponent_fit: k must be a finite real >= 1");
  if (points < 8) throw InvalidArgument("exponent_fit: at least 8 grid points are required");
  if (!(x_min > 0.0) || !(x_max / x_min >= 100.0) || !std::isfinite(x_max)) {
    throw InvalidArgument("exponent_fit: need 0 < x_min and x_max/x_min >= 100");
  }
  ExponentFit fit;
  fit.k = k;
  fit.predicted_slope = 0.25 - 0.5 * k;
  const double log_min = std::log(x_min);
  const double log_span = std::log(x_max) - log_min;
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = i + 1 == points ? x_max : std::exp(log_min + log_span * i / (points - 1));
    const TermBreakdown p = pk_reference(k, x, n_terms);
    fit.x_grid.push_back(x);
    fit.values.push_back(p.value);
    fit.budgets.push_back(p.truncation_estimate);
    if (std::abs(p.value) < 10.0 * p.truncation_estimate) {
      fit.excluded.push_back(x);
      continue;
    }
    lx.push_back(std::log(x));
    ly.push_back(std::log(std::abs(p.value)));
  }
  if (lx.size() < 5) {
    throw InsufficientSignal("exponent_fit: only " + std::to_string(lx.size()) +
                             " grid points exceed ten times their truncation budget");
  }
  const double n = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  return fit;
}

}  // namespace riesz
