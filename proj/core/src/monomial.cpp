#include "moment_forge/monomial.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

#include "moment_forge/errors.hpp"

namespace moment_forge {

namespace {
std::atomic<std::int64_t> g_degree_cap{kDefaultDegreeCap};
}

std::int64_t degree_cap() noexcept { return g_degree_cap.load(std::memory_order_relaxed); }

void set_degree_cap(std::int64_t cap) {
  if (cap < 1) throw UsageError("degree cap must be positive");
  g_degree_cap.store(cap, std::memory_order_relaxed);
}

std::int64_t total_degree(std::span<const Exponent> e) noexcept {
  std::int64_t s = 0;
  for (Exponent x : e) s += x;
  return s;
}

std::int64_t absolute_degree(std::span<const Exponent> e) noexcept {
  std::int64_t s = 0;
  for (Exponent x : e) s += std::abs(static_cast<std::int64_t>(x));
  return s;
}

Exponent checked_exponent(std::int64_t value) {
  if (value > std::numeric_limits<Exponent>::max() ||
      value < std::numeric_limits<Exponent>::min()) {
    throw LimitError("exponent overflow (" + std::to_string(value) + ")");
  }
  if (std::abs(value) > degree_cap()) {
    throw LimitError("degree " + std::to_string(value) + " exceeds cap " +
                     std::to_string(degree_cap()));
  }
  return static_cast<Exponent>(value);
}

void check_degree_cap(std::span<const Exponent> e) {
  const std::int64_t d = absolute_degree(e);
  if (d > degree_cap()) {
    throw LimitError("total degree " + std::to_string(d) + " exceeds cap " +
                     std::to_string(degree_cap()));
  }
}

bool grlex_greater(std::span<const Exponent> a, std::span<const Exponent> b) noexcept {
  const std::int64_t da = total_degree(a);
  const std::int64_t db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Exponent x : e) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace moment_forge
