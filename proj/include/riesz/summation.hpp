#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <vector>

namespace riesz {

// Kahan-Babuska-Neumaier accumulator. The compensation term collects the
// low-order bits lost by each addition, so cancellation-heavy sums keep
// close to full working precision.
template <class T>
class CompensatedSum {
  static_assert(std::is_floating_point_v<T>);

 public:
  CompensatedSum() = default;
  explicit CompensatedSum(T initial) : sum_(initial) {}

  void add(T term) {
    const T t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }

  T value() const { return sum_ + comp_; }

 private:
  T sum_{0};
  T comp_{0};
};

class ComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  void merge(const ComplexSum& other) {
    re_.merge(other.re_);
    im_.merge(other.im_);
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

// Worker count used by the block reductions. Results never depend on it.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs body(b) for b in [0, blocks) on up to thread_count() workers.
void parallel_for_blocks(std::size_t blocks, const std::function<void(std::size_t)>& body);

inline constexpr std::size_t kReductionBlock = 4096;

// Sums term(i) over i in [first, last] (inclusive). The index range is cut
// into fixed blocks of kReductionBlock indices, each block is summed with
// compensation, and block results are merged along a fixed pairwise tree.
// The block layout and tree shape do not depend on the thread count, so the
// result is bit-identical for any number of workers.
template <class Acc, class Term>
Acc block_reduce(std::size_t first, std::size_t last, Term&& term) {
  if (last < first) return Acc{};
  const std::size_t count = last - first + 1;
  const std::size_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
  std::vector<Acc> partial(blocks);
  parallel_for_blocks(blocks, [&](std::size_t b) {
    const std::size_t lo = first + b * kReductionBlock;
    const std::size_t hi = std::min(last, lo + kReductionBlock - 1);
    Acc acc;
    for (std::size_t i = lo; i <= hi; ++i) term(i, acc);
    partial[b] = acc;
  });
  for (std::size_t width = 1; width < blocks; width *= 2) {
    for (std::size_t i = 0; i + width < blocks; i += 2 * width) {
      partial[i].merge(partial[i + width]);
    }
  }
  return partial.front();
}

}  // namespace riesz
