#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "moment_forge/polynomial.hpp"

namespace moment_forge::selftest {

/// Seeded generator with a portable bounded draw, so a seed reproduces the
/// same instances on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct PolyShape {
  std::size_t arity = 2;
  int max_degree = 4;
  int max_terms = 6;
  long coeff_bound = 9;
  bool complex = true;    // Gaussian-integer numerators
  bool fractions = true;  // small random denominators
};

GaussRat random_scalar(Rng& rng, const PolyShape& shape);

/// Random polynomial; may be zero only if shape.max_terms == 0.
MPoly random_poly(Rng& rng, const PolyShape& shape);

/// Random nonzero polynomial homogeneous of degree degrees[k] in each pair
/// (x_k, y_k) = (variable k, variable n + k).
MPoly random_doubly_homogeneous(Rng& rng, const std::vector<int>& degrees, int max_terms);

}  // namespace moment_forge::selftest
