#include "moment_forge/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "moment_forge/errors.hpp"

namespace moment_forge {

namespace {

// Grows a table of a(0), a(1), ... on demand. std::deque keeps references
// stable across growth, but we still copy out under the lock.
template <class Step>
class MemoTable {
 public:
  MemoTable(std::deque<mpz_class> seed, Step step) : values_(std::move(seed)), step_(step) {}

  mpz_class at(std::size_t k) {
    {
      std::shared_lock lock(mutex_);
      if (k < values_.size()) return values_[k];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= k) values_.push_back(step_(values_, values_.size()));
    return values_[k];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<mpz_class> values_;
  Step step_;
};

auto factorial_step = [](const std::deque<mpz_class>& v, std::size_t k) {
  return v[k - 1] * static_cast<unsigned long>(k);
};

// Index k holds (k-1)!!, so index 0 is (-1)!!.
auto double_factorial_step = [](const std::deque<mpz_class>& v, std::size_t k) {
  return v[k - 2] * static_cast<unsigned long>(k - 1);
};

}  // namespace

mpz_class factorial(long n) {
  if (n < 0) throw UsageError("factorial of negative number " + std::to_string(n));
  static MemoTable table(std::deque<mpz_class>{1}, factorial_step);
  return table.at(static_cast<std::size_t>(n));
}

mpz_class double_factorial(long n) {
  if (n < -1) throw UsageError("double factorial of " + std::to_string(n));
  static MemoTable table(std::deque<mpz_class>{1, 1}, double_factorial_step);
  return table.at(static_cast<std::size_t>(n + 1));
}

}  // namespace moment_forge
