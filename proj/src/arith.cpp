#include "riesz/arith.hpp"

#include <cmath>
#include <string>

#include "riesz/errors.hpp"
#include "riesz/summation.hpp"

namespace riesz {

MobiusTable::MobiusTable(std::size_t n_max, std::vector<std::int8_t> mu)
    : n_max_(n_max), mu_(std::move(mu)) {
  if (mu_.size() != n_max_ + 1) throw InvalidArgument("MobiusTable: size mismatch");
}

int MobiusTable::mu(std::size_t n) const {
  if (n == 0 || n > n_max_) {
    throw OutOfRange("mu(" + std::to_string(n) + ") outside table bound " + std::to_string(n_max_));
  }
  return mu_[n];
}

std::span<const std::int32_t> MobiusTable::mertens_prefix() const {
  std::call_once(prefix_once_, [this] {
    prefix_.resize(n_max_ + 1);
    std::int32_t acc = 0;
    prefix_[0] = 0;
    for (std::size_t n = 1; n <= n_max_; ++n) {
      acc += mu_[n];
      prefix_[n] = acc;
    }
  });
  return prefix_;
}

std::shared_ptr<const MobiusTable> sieve_mobius(std::size_t n_max) {
  if (n_max == 0) throw InvalidArgument("sieve_mobius: n_max must be positive");
  if (n_max > kMaxSieveBound) {
    throw OutOfRange("sieve_mobius: n_max exceeds practical cap " + std::to_string(kMaxSieveBound));
  }
  std::vector<std::int8_t> mu(n_max + 1, 0);
  std::vector<bool> composite(n_max + 1, false);
  std::vector<std::uint32_t> primes;
  mu[1] = 1;
  for (std::size_t i = 2; i <= n_max; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      mu[i] = -1;
    }
    for (const std::uint32_t p : primes) {
      const std::size_t m = i * p;
      if (m > n_max) break;
      composite[m] = true;
      if (i % p == 0) {
        mu[m] = 0;
        break;
      }
      mu[m] = static_cast<std::int8_t>(-mu[i]);
    }
  }
  return std::make_shared<const MobiusTable>(n_max, std::move(mu));
}

std::int64_t mertens(std::size_t x, const MobiusTable& table) {
  if (x == 0) throw InvalidArgument("mertens: x must be positive");
  if (x > table.n_max()) {
    throw OutOfRange("mertens: x = " + std::to_string(x) + " exceeds table bound " +
                     std::to_string(table.n_max()));
  }
  return table.mertens_prefix()[x];
}

double partial_power_sum(std::size_t ell, std::size_t n, double k, const MobiusTable& table) {
  if (ell == 0) throw InvalidArgument("partial_power_sum: ell must be positive");
  if (ell > n) throw InvalidArgument("partial_power_sum: ell > n");
  if (n > table.n_max()) throw OutOfRange("partial_power_sum: n exceeds table bound");
  CompensatedSum<double> acc;
  for (std::size_t m = ell; m <= n; ++m) {
    const int mu = table[m];
    if (mu != 0) acc.add(mu * std::pow(static_cast<double>(m), -k));
  }
  return acc.value();
}

double abel_summation(std::size_t ell, std::size_t n, const std::function<double(double)>& f,
                      const MobiusTable& table) {
  if (ell == 0 || ell > n) throw InvalidArgument("abel_summation: need 1 <= ell <= n");
  if (n > table.n_max()) throw OutOfRange("abel_summation: n exceeds table bound");
  const auto prefix = table.mertens_prefix();
  CompensatedSum<double> acc;
  acc.add(prefix[n] * f(static_cast<double>(n)));
  acc.add(-prefix[ell - 1] * f(static_cast<double>(ell)));
  double f_here = f(static_cast<double>(ell));
  for (std::size_t m = ell; m < n; ++m) {
    const double f_next = f(static_cast<double>(m + 1));
    if (prefix[m] != 0) acc.add(-prefix[m] * (f_next - f_here));
    f_here = f_next;
  }
  return acc.value();
}

}  // namespace riesz
