#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace moment_forge {

using Exponent = std::int32_t;
using Exponents = std::vector<Exponent>;

inline constexpr std::int64_t kDefaultDegreeCap = 10'000;

/// Process-wide cap on the absolute total degree of any stored monomial.
/// Arithmetic that would exceed it throws LimitError instead of growing.
std::int64_t degree_cap() noexcept;
void set_degree_cap(std::int64_t cap);

/// Restores the previous cap on destruction.
class ScopedDegreeCap {
 public:
  explicit ScopedDegreeCap(std::int64_t cap) : previous_(degree_cap()) { set_degree_cap(cap); }
  ~ScopedDegreeCap() { set_degree_cap(previous_); }
  ScopedDegreeCap(const ScopedDegreeCap&) = delete;
  ScopedDegreeCap& operator=(const ScopedDegreeCap&) = delete;

 private:
  std::int64_t previous_;
};

/// Signed sum of exponents.
std::int64_t total_degree(std::span<const Exponent> e) noexcept;
/// Sum of absolute exponents; this is what the degree cap bounds.
std::int64_t absolute_degree(std::span<const Exponent> e) noexcept;

/// Throws LimitError when the value leaves the Exponent range or the
/// monomial exceeds the degree cap.
Exponent checked_exponent(std::int64_t value);
void check_degree_cap(std::span<const Exponent> e);

/// Strict graded-lex "greater": higher total degree first, ties broken
/// lexicographically with variable 0 most significant.
bool grlex_greater(std::span<const Exponent> a, std::span<const Exponent> b) noexcept;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept;
};

}  // namespace moment_forge
