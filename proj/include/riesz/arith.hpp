#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace riesz {

// Largest sieve bound accepted by sieve_mobius. The table costs one byte per
// entry, plus four bytes per entry once Mertens prefix sums are requested.
inline constexpr std::size_t kMaxSieveBound = 1'000'000'000;

// Moebius values mu(1..n_max). Immutable after construction and safe to share
// across threads; the Mertens prefix array is built once on first use.
class MobiusTable {
 public:
  MobiusTable(std::size_t n_max, std::vector<std::int8_t> mu);

  std::size_t n_max() const noexcept { return n_max_; }

  // mu(n) for 1 <= n <= n_max; unchecked.
  int operator[](std::size_t n) const noexcept { return mu_[n]; }

  // Checked access.
  int mu(std::size_t n) const;

  // Index 0 is a placeholder; entries 1..n_max hold mu(n).
  std::span<const std::int8_t> values() const noexcept { return mu_; }

  // Prefix sums M(0..n_max); built lazily.
  std::span<const std::int32_t> mertens_prefix() const;

 private:
  std::size_t n_max_;
  std::vector<std::int8_t> mu_;
  mutable std::once_flag prefix_once_;
  mutable std::vector<std::int32_t> prefix_;
};

// Linear (smallest-prime-factor) sieve. O(n_max) time.
std::shared_ptr<const MobiusTable> sieve_mobius(std::size_t n_max);

// Sum of mu(n) for 1 <= n <= x.
std::int64_t mertens(std::size_t x, const MobiusTable& table);

// Sum of mu(m) / m^k for ell <= m <= n, compensated.
double partial_power_sum(std::size_t ell, std::size_t n, double k, const MobiusTable& table);

// Abel (Euler partial) summation of mu(m) f(m) over ell <= m <= n, written
// through the summatory function A(t) = M(t):
//   A(n) f(n) - A(ell-1) f(ell) - sum_{m=ell}^{n-1} A(m) (f(m+1) - f(m)).
double abel_summation(std::size_t ell, std::size_t n, const std::function<double(double)>& f,
                      const MobiusTable& table);

}  // namespace riesz
