// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "riesz/csv.hpp"
#include "riesz/specfun.hpp"
#include "riesz/summation.hpp"
#include "riesz/verify.hpp"
#include "riesz/zeros.hpp"
#include "riesz/zeta.hpp"
#include "support/generators.hpp"

using namespace riesz;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<double> kGridK = {1.0, 1.5, 2.0, 3.0};
const std::vector<double> kGridX = {0.5, 1.0, kPi, 5.0, 10.0, 25.0};

std::vector<ResidualReport> identity_grid(const std::vector<ZeroRecord>& z50) {
  const auto groups = bracket_zeros(z50, kDefaultA0);
  std::vector<ResidualReport> out;
  for (double k : kGridK) {
    for (double x : kGridX) {
      EvalParams p;
      p.k = k;
      p.x = x;
      p.n_terms = 100'000;
      p.direct_terms = 1'000'000;
      p.num_zeros = 50;
      out.push_back(identity_residual(p, z50, groups));
    }
  }
  return out;
}

void criterion1(const std::vector<ZeroRecord>& z50) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = identity_grid(z50);
  bool ok = true;
  double worst = 0.0;
  for (const auto& r : reports) {
    ok = ok && std::abs(r.residual) <= std::max(1e-6, r.budget);
    worst = std::max(worst, std::abs(r.residual));
  }
  const double dt = seconds_since(t0);
  report(1, ok && dt <= 60.0,
         "identity residual on 24 points, max |residual| " + fmt("%.3g", worst) + ", " + fmt("%.1f s", dt));
}

void criterion2(const std::vector<ZeroRecord>& z50) {
  bool ok = true;
  double worst_res = 0.0;
  double worst_diff = 0.0;
  for (double x : {1.0, kPi, 4.0, 9.0}) {
    const auto hl = hardy_littlewood_check(x, 100'000, z50);
    ok = ok && std::abs(hl.residual) <= 1e-6 + hl.budget;
    ok = ok && hl.lhs_diff <= 1e-10 && hl.main_diff <= 1e-10 && hl.zero_diff <= 1e-10;
    worst_res = std::max(worst_res, std::abs(hl.residual));
    worst_diff = std::max({worst_diff, hl.lhs_diff, hl.main_diff, hl.zero_diff});
  }
  report(2, ok,
         "k = 1 exponential form, max |residual| " + fmt("%.3g", worst_res) + ", max diff vs identity " +
             fmt("%.3g", worst_diff));
}

void criterion3(const std::vector<ZeroRecord>& z50) {
  const auto hl = hardy_littlewood_check(kPi, 100'000, z50);
  const auto zs = zero_sum(1, kPi, z50, bracket_zeros(z50, kDefaultA0));
  const bool ok = std::abs(zs.value) <= 1e-6 + zs.truncation_estimate &&
                  std::abs(hl.symmetric_lhs) <= 1e-6 + hl.symmetric_budget;
  report(3, ok,
         "symmetric point x = pi, |zero sum| " + fmt("%.3g", std::abs(zs.value)) + ", |side difference| " +
             fmt("%.3g", std::abs(hl.symmetric_lhs)));
}

void criterion4() {
  const auto table = shared_mobius(1'000'000);
  bool ok = true;
  double worst = 0.0;
  int n = 0;
  for (double k : kGridK) {
    for (double x : kGridX) {
      if (x > 25.0) continue;
      const auto d = pk_direct(k, x, 1'000'000, *table);
      const auto p = pk_power_series(k, x);
      const double diff = std::abs(d.value - p.value);
      ok = ok && diff <= 1e-8 + d.truncation_estimate + p.truncation_estimate;
      worst = std::max(worst, diff);
      ++n;
    }
  }
  report(4, ok && n == 24, "direct vs power series on " + std::to_string(n) + " points, max diff " + fmt("%.3g", worst));
}

void criterion5(const std::vector<ZeroRecord>& z50) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Complex> s1 = {0.05, 0.15, 0.25, 0.35, 0.5, 0.6, 0.75, 0.9, {0.5, 0.5}};
  const std::vector<Complex> s2 = {-0.4, -0.3, -0.15, 0.1, 0.25, 0.5, 0.75, 0.9, {0.5, 0.5}};
  bool ok = true;
  double worst = 0.0;
  for (const auto& [k, pts] : {std::pair{1.0, s1}, std::pair{2.0, s2}}) {
    for (const Complex s : pts) {
      const auto m = mellin_check(k, s, 1e3, z50);
      ok = ok && m.rel_error <= 1e-5;
      worst = std::max(worst, m.rel_error);
    }
  }
  const double dt = seconds_since(t0);
  report(5, ok && dt <= 120.0,
         "Mellin transform at 18 points, max relative error " + fmt("%.3g", worst) + ", " + fmt("%.1f s", dt));
}

void criterion6() {
  bool ok = true;
  std::string detail;
  for (const auto& [k, tol] : {std::pair{2.0, 0.1}, std::pair{1.0, 0.15}}) {
    const auto fit = exponent_fit(k, 1e2, 1e5, 16);
    const bool good = std::abs(fit.slope - fit.predicted_slope) <= tol;
    ok = ok && good;
    std::string excluded;
    for (double x : fit.excluded) excluded += (excluded.empty() ? "" : " ") + fmt("%.4g", x);
    if (excluded.empty()) excluded = "none";
    detail += fmt("k = %g: ", k) + fmt("slope %.3f", fit.slope) + fmt(" vs %.3f", fit.predicted_slope) +
              fmt(" (tol %.2f), excluded ", tol) + excluded + "; ";
  }
  report(6, ok, "exponent fits on [1e2, 1e5], " + detail);
}

void criterion7() {
  const auto zs = acquire_zeros(108);
  std::size_t below100 = 0;
  std::size_t below250 = 0;
  double worst = 0.0;
  for (const auto& z : zs) {
    below100 += z.gamma < 100.0;
    below250 += z.gamma < 250.0;
    worst = std::max(worst, std::abs(zeta_complex({0.5, z.gamma})));
  }
  const bool rvm = std::abs(static_cast<double>(below100) - rvm_smooth_count(100.0)) <= 1.0 &&
                   std::abs(static_cast<double>(below250) - rvm_smooth_count(250.0)) <= 1.0;
  const bool ok = below100 == 29 && below250 >= 95 && below250 <= 110 && worst <= 1e-10 && rvm;
  report(7, ok,
         std::to_string(below100) + " zeros below 100, " + std::to_string(below250) + " below 250, max |zeta| " +
             fmt("%.3g", worst));
}

void criterion8() {
  gen::Gen g(0xacce);
  double rec = 0.0;
  double refl = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex z = g.complex_in(-5.0, 20.0, -100.0, 100.0);
    if (std::abs(z - std::round(z.real())) < 1e-3) continue;
    const Complex a = gamma_complex(z + 1.0);
    const Complex b = z * gamma_complex(z);
    if (std::abs(a) < 1e-290 || std::abs(b) < 1e-290) continue;
    rec = std::max(rec, gen::rel_diff(a, b));
  }
  for (int i = 0; i < 500; ++i) {
    const Complex z = g.complex_in(-8.0, 8.0, -20.0, 20.0);
    if (std::abs(z - std::round(z.real())) < 1e-3) continue;
    refl = std::max(refl, std::abs(gamma_complex(z) * gamma_complex(1.0 - z) * sin_pi(z) / kPi - 1.0));
  }
  bool stirling = true;
  for (double sigma : {0.0, 0.5, 1.0, 2.0}) {
    double prev = 0.0;
    for (double t : {20.0, 40.0, 80.0, 160.0}) {
      const double dev = std::abs(std::abs(gamma_complex({sigma, t})) / stirling_magnitude(sigma, t) - 1.0);
      if (prev > 0.0) stirling = stirling && prev / dev > 1.4 && prev / dev < 2.6;
      prev = dev;
    }
  }
  double kummer = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double a = g.uniform(0.5, 20.0);
    const double b = g.uniform(0.25, 5.0);
    const double z = g.uniform(-50.0, 0.0);
    const double lhs = hyp1f1(a, b, z);
    const double rhs = std::exp(z) * hyp1f1(b - a, b, -z);
    kummer = std::max(kummer, std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300}));
  }
  double fe = 0.0;
  int used = 0;
  auto xi_side = [](Complex s) {
    return std::exp(-0.5 * s * std::log(kPi) + log_gamma_complex(0.5 * s)) * zeta_complex(s);
  };
  while (used < 200) {
    const Complex s = g.complex_in(-3.0, 4.0, -60.0, 60.0);
    if (std::abs(s) < 0.1 || std::abs(s - 1.0) < 0.1) continue;
    if (std::abs(s.imag()) < 0.05 && s.real() < 0.0) continue;
    const Complex a = xi_side(s);
    const Complex b = xi_side(1.0 - s);
    fe = std::max(fe, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
    ++used;
  }
  const bool ok = rec <= 1e-9 && refl <= 1e-9 && stirling && kummer <= 1e-9 && fe <= 1e-8;
  report(8, ok,
         "gamma recurrence " + fmt("%.2g", rec) + ", reflection " + fmt("%.2g", refl) + ", Stirling halving " +
             (stirling ? "ok" : "off") + ", Kummer " + fmt("%.2g", kummer) + ", functional equation " +
             fmt("%.2g", fe));
}

void criterion9(const std::vector<ZeroRecord>& z50) {
  const auto r = ramanujan_falsification(1.0, 100'000, z50);
  const bool ok = std::abs(r.gap) > 10.0 * r.budget && std::abs(r.gap - r.zero_correction) <= r.budget;
  report(9, ok,
         "x = 1 gap " + fmt("%.6g", r.gap) + ", zero correction " + fmt("%.6g", r.zero_correction) + ", budget " +
             fmt("%.3g", r.budget));
}

void criterion10(const std::vector<ZeroRecord>& z50) {
  auto csv_with = [&](unsigned threads) {
    set_thread_count(threads);
    std::ostringstream out;
    csv::write_csv(out, csv::residual_table(identity_grid(z50)));
    return out.str();
  };
  const std::string one = csv_with(1);
  const std::string eight = csv_with(8);
  set_thread_count(0);
  report(10, one == eight && !one.empty(), "identity CSV with 1 and 8 threads, " + std::to_string(one.size()) + " bytes");
}

template <class F>
void guarded(int id, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, false, std::string("threw: ") + e.what());
  }
}

}  // namespace

int main() {
  std::vector<ZeroRecord> z50;
  try {
    z50 = acquire_zeros(50);
  } catch (const std::exception& e) {
    std::printf("FAIL zero acquisition: %s\n", e.what());
    return 1;
  }
  guarded(1, [&] { criterion1(z50); });
  guarded(2, [&] { criterion2(z50); });
  guarded(3, [&] { criterion3(z50); });
  guarded(4, [&] { criterion4(); });
  guarded(5, [&] { criterion5(z50); });
  guarded(6, [&] { criterion6(); });
  guarded(7, [&] { criterion7(); });
  guarded(8, [&] { criterion8(); });
  guarded(9, [&] { criterion9(z50); });
  guarded(10, [&] { criterion10(z50); });
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
