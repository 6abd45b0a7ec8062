#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "riesz/specfun.hpp"

namespace riesz {

// A non-trivial zero rho = 1/2 + i gamma. Conjugates are never stored; the
// zero-sum evaluator synthesizes them.
struct ZeroRecord {
  double gamma = 0.0;
  Complex zeta_prime{};
  double residual = 0.0;      // |zeta(rho)| after refinement
  double conditioning = 0.0;  // |zeta'(rho)|
};

// Indices into a record list whose contributions are summed as one unit.
struct BracketGroup {
  std::vector<std::size_t> member_indices;
};

inline constexpr double kZeroResidualTolerance = 1e-10;
inline constexpr double kSimplicityMargin = 1e-6;
inline constexpr double kDefaultA0 = 1.0;

// theta(t) = t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t).
double riemann_siegel_theta(double t);

// Z(t) = Re(e^{i theta(t)} zeta(1/2 + it)).
double hardy_z(double t);

struct ScanWarning {
  double t_lo;
  double t_hi;
  std::string message;
};

struct ScanResult {
  std::vector<double> ordinates;
  std::vector<ScanWarning> warnings;
};

// Sign changes of Z on [t_min, t_max] at the given step, each bisected to
// width <= 1e-6. Requires 5 <= t_min < t_max <= 300 and 0 < step <= 0.5.
// Warnings are raised when adjacent sign changes are closer than two steps,
// or when the count in a window falls short of the Riemann-von Mangoldt
// increment by more than one (a pair of zeros probably hides in one step).
ScanResult locate_zeros(double t_min, double t_max, double step);

// Newton on Z(t) from gamma0. Throws RefinementFailure when the residual does
// not reach 1e-10 within 50 iterations and SimplicityViolation when
// |zeta'(rho)| <= 1e-6.
ZeroRecord refine_zero(double gamma0);

// Zero table file: '#' comments, one positive ordinate per line, strictly
// ascending. Each entry is refined before acceptance.
std::vector<ZeroRecord> load_zeros(const std::string& path);
std::vector<double> parse_zero_table(const std::string& text);
void write_zero_table(const std::string& path, const std::vector<double>& ordinates);

// First n zeros from scan + refine below t = 250 (n <= 108). Cached per
// process; the cache is filled once.
std::vector<ZeroRecord> acquire_zeros(std::size_t n);

// Transitive closure over consecutive pairs of
// |g1 - g2| < exp(-A0 g1 / log g1) + exp(-A0 g2 / log g2).
std::vector<BracketGroup> bracket_zeros(const std::vector<ZeroRecord>& records, double a0);

// Singleton grouping, one group per record.
std::vector<BracketGroup> singleton_groups(std::size_t n);

struct InvZetaBoundReport {
  double sigma;
  double t;
  double c1;
  double inv_abs_zeta;
  double bound;  // e^{C1 T}
  bool holds;
};

// Samples 1/|zeta(sigma + iT)| < e^{C1 T}. T must lie at least 1e-3 away
// from every zero ordinate below 300 (OutOfRange otherwise); C1 must lie in
// (0, pi/4) (InvalidArgument otherwise).
InvZetaBoundReport inv_zeta_bound_check(double sigma, double t, double c1);

// T/(2pi) log(T/(2pi e)) + 7/8.
double rvm_smooth_count(double t);

}  // namespace riesz
