#include "riesz/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"
#include "riesz/summation.hpp"
#include "riesz/zeta.hpp"

namespace riesz {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kBisectWidth = 1e-6;
constexpr int kNewtonIterations = 50;
constexpr double kAcquireTop = 250.0;
constexpr double kAcquireStep = 0.05;

double theta_prime(double t) {
  const double u = 1.0 / (t * t);
  return 0.5 * std::log(t / kTwoPi) - u * (1.0 / 48.0 + u * (7.0 / 1920.0 + u * (31.0 / 16128.0)));
}

double bisect_sign_change(double lo, double hi, double z_lo) {
  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    const double z_mid = hardy_z(mid);
    if (z_mid == 0.0) return mid;
    if ((z_mid < 0) == (z_lo < 0)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string format_interval(double lo, double hi) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.6f, %.6f]", lo, hi);
  return buf;
}

}  // namespace

double riemann_siegel_theta(double t) {
  // Im log Gamma(1/4 + it/2) on the continuous branch; the asymptotic series is off by ~1e-8 at t = 14.
  return log_gamma_complex(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t) {
  const Complex phase = std::polar(1.0, riemann_siegel_theta(t));
  return (phase * zeta_complex(Complex(0.5, t))).real();
}

double rvm_smooth_count(double t) {
  if (!(t > 0.0)) throw InvalidArgument("rvm_smooth_count: T must be positive");
  return t / kTwoPi * std::log(t / (kTwoPi * std::exp(1.0))) + 7.0 / 8.0;
}

ScanResult locate_zeros(double t_min, double t_max, double step) {
  if (!(t_min >= 5.0) || !(t_max > t_min) || !(t_max <= 300.0)) {
    throw InvalidArgument("locate_zeros: require 5 <= t_min < t_max <= 300");
  }
  if (!(step > 0.0) || step > 0.5) throw InvalidArgument("locate_zeros: require 0 < step <= 0.5");

  const auto intervals = static_cast<std::size_t>(std::ceil((t_max - t_min) / step));
  std::vector<double> ts(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    ts[i] = std::min(t_max, t_min + static_cast<double>(i) * step);
  }
  std::vector<double> zs(ts.size());
  constexpr std::size_t kChunk = 64;
  parallel_for_blocks((ts.size() + kChunk - 1) / kChunk, [&](std::size_t b) {
    const std::size_t hi = std::min(ts.size(), (b + 1) * kChunk);
    for (std::size_t i = b * kChunk; i < hi; ++i) zs[i] = hardy_z(ts[i]);
  });

  std::vector<std::size_t> changes;
  for (std::size_t i = 0; i < intervals; ++i) {
    if (zs[i] == 0.0 || (zs[i] < 0) != (zs[i + 1] < 0)) changes.push_back(i);
  }

  ScanResult result;
  result.ordinates.resize(changes.size());
  parallel_for_blocks(changes.size(), [&](std::size_t c) {
    const std::size_t i = changes[c];
    result.ordinates[c] = zs[i] == 0.0 ? ts[i] : bisect_sign_change(ts[i], ts[i + 1], zs[i]);
  });

  for (std::size_t c = 1; c < changes.size(); ++c) {
    if (changes[c] - changes[c - 1] < 2) {
      result.warnings.push_back({ts[changes[c - 1]], ts[changes[c] + 1],
                                 "adjacent sign changes within two steps " +
                                     format_interval(ts[changes[c - 1]], ts[changes[c] + 1])});
    }
  }
  // A local dip of |Z| without a sign change can hide two zeros in one step.
  for (std::size_t i = 1; i + 1 < zs.size(); ++i) {
    const bool same_sign = (zs[i - 1] < 0) == (zs[i] < 0) && (zs[i] < 0) == (zs[i + 1] < 0);
    if (same_sign && std::abs(zs[i]) < std::abs(zs[i - 1]) && std::abs(zs[i]) < std::abs(zs[i + 1])) {
      const double curvature = std::abs(zs[i - 1] + zs[i + 1] - 2.0 * zs[i]);
      if (std::abs(zs[i]) < 0.25 * curvature) {
        result.warnings.push_back({ts[i - 1], ts[i + 1],
                                   "possible unresolved zero pair " + format_interval(ts[i - 1], ts[i + 1])});
      }
    }
  }
  if (t_min >= 10.0) {
    const double expected = rvm_smooth_count(t_max) - rvm_smooth_count(t_min);
    if (static_cast<double>(changes.size()) < expected - 1.5) {
      result.warnings.push_back(
          {t_min, t_max, "sign-change count below the smooth estimate " + format_interval(t_min, t_max)});
    }
  }
  return result;
}

ZeroRecord refine_zero(double gamma0) {
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw InvalidArgument("refine_zero: ordinate must be positive");
  double t = gamma0;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const Complex s(0.5, t);
    const Complex z = zeta_complex(s);
    const double residual = std::abs(z);
    if (residual <= kZeroResidualTolerance) {
      ZeroRecord rec;
      rec.gamma = t;
      rec.zeta_prime = zeta_derivative(s);
      rec.residual = residual;
      rec.conditioning = std::abs(rec.zeta_prime);
      if (rec.conditioning <= kSimplicityMargin) {
        throw SimplicityViolation("refine_zero: |zeta'(rho)| <= 1e-6 near t = " + std::to_string(t));
      }
      return rec;
    }
    const Complex phase = std::polar(1.0, riemann_siegel_theta(t));
    const Complex dz = zeta_derivative(s);
    const Complex i(0.0, 1.0);
    const double zval = (phase * z).real();
    const double zder = (phase * (i * theta_prime(t) * z + i * dz)).real();
    if (zder == 0.0 || !std::isfinite(zder)) break;
    const double step = zval / zder;
    t -= step;
    if (!(t > 0.0)) break;
  }
  throw RefinementFailure("refine_zero: Newton did not converge from t = " + std::to_string(gamma0));
}

std::vector<double> parse_zero_table(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || !(v > 0.0) || !std::isfinite(v)) {
      throw ParseError("zero table: expected a positive decimal ordinate, got '" + token + "'", line_no);
    }
    if (!out.empty() && !(v > out.back())) {
      throw FormatError("zero table: ordinates not strictly ascending at line " + std::to_string(line_no));
    }
    out.push_back(v);
  }
  return out;
}

std::vector<ZeroRecord> load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("load_zeros: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::vector<double> seeds = parse_zero_table(buf.str());
  std::vector<ZeroRecord> records(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) records[i] = refine_zero(seeds[i]);
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (!(records[i].gamma > records[i - 1].gamma)) {
      throw FormatError("load_zeros: refined ordinates collapse or reorder near " +
                        std::to_string(records[i].gamma));
    }
  }
  return records;
}

void write_zero_table(const std::string& path, const std::vector<double>& ordinates) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("write_zero_table: cannot open " + path);
  out << "# imaginary parts of zeta zeros on the critical line\n";
  char buf[64];
  for (const double g : ordinates) {
    std::snprintf(buf, sizeof buf, "%.17g\n", g);
    out << buf;
  }
}

std::vector<ZeroRecord> acquire_zeros(std::size_t n) {
  static std::once_flag once;
  static std::vector<ZeroRecord> cache;
  std::call_once(once, [] {
    const ScanResult scan = locate_zeros(5.0, kAcquireTop, kAcquireStep);
    std::vector<ZeroRecord> recs(scan.ordinates.size());
    parallel_for_blocks(recs.size(), [&](std::size_t i) { recs[i] = refine_zero(scan.ordinates[i]); });
    cache = std::move(recs);
  });
  if (n > cache.size()) {
    throw OutOfRange("acquire_zeros: only " + std::to_string(cache.size()) +
                     " zeros are self-computed; supply a zero table for more");
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<BracketGroup> bracket_zeros(const std::vector<ZeroRecord>& records, double a0) {
  if (!(a0 > 0.0)) throw InvalidArgument("bracket_zeros: A0 must be positive");
  std::vector<BracketGroup> groups;
  auto width = [a0](double g) { return std::exp(-a0 * g / std::log(g)); };
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i > 0) {
      const double g1 = records[i - 1].gamma;
      const double g2 = records[i].gamma;
      if (std::abs(g1 - g2) < width(g1) + width(g2)) {
        groups.back().member_indices.push_back(i);
        continue;
      }
    }
    groups.push_back({{i}});
  }
  return groups;
}

std::vector<BracketGroup> singleton_groups(std::size_t n) {
  std::vector<BracketGroup> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[i].member_indices = {i};
  return groups;
}

InvZetaBoundReport inv_zeta_bound_check(double sigma, double t, double c1) {
  if (!(c1 > 0.0) || !(c1 < kPi / 4.0)) throw InvalidArgument("inv_zeta_bound_check: C1 must lie in (0, pi/4)");
  if (!std::isfinite(sigma) || !std::isfinite(t)) throw InvalidArgument("inv_zeta_bound_check: non-finite input");
  const double at = std::abs(t);
  if (at + 1.0 > 5.0 && at - 1.0 < 300.0) {
    const double lo = std::max(5.0, at - 1.0);
    const double hi = std::min(300.0, at + 1.0);
    for (const double g : locate_zeros(lo, hi, 0.01).ordinates) {
      if (std::abs(g - at) < 1e-3) {
        throw OutOfRange("inv_zeta_bound_check: T lies within 1e-3 of the zero ordinate " + std::to_string(g));
      }
    }
  }
  InvZetaBoundReport r{sigma, t, c1, 0.0, 0.0, false};
  r.inv_abs_zeta = 1.0 / std::abs(zeta_complex(Complex(sigma, t)));
  r.bound = std::exp(c1 * t);
  r.holds = r.inv_abs_zeta < r.bound;
  return r;
}

}  // namespace riesz
