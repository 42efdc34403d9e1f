#include "moment_forge/selftest/generators.hpp"

#include <limits>

namespace moment_forge::selftest {

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

GaussRat random_scalar(Rng& rng, const PolyShape& shape) {
  while (true) {
    mpq_class re(rng.uniform(-shape.coeff_bound, shape.coeff_bound),
                 shape.fractions ? rng.uniform(1, 4) : 1);
    mpq_class im(shape.complex ? rng.uniform(-shape.coeff_bound, shape.coeff_bound) : 0,
                 shape.fractions ? rng.uniform(1, 4) : 1);
    GaussRat c(std::move(re), std::move(im));
    if (!c.is_zero()) return c;
  }
}

MPoly random_poly(Rng& rng, const PolyShape& shape) {
  if (shape.max_terms == 0) return MPoly(shape.arity);
  while (true) {
    const long count = rng.uniform(1, shape.max_terms);
    std::vector<Term> terms;
    for (long k = 0; k < count; ++k) {
      Exponents e(shape.arity, 0);
      const long degree = rng.uniform(0, shape.max_degree);
      for (long d = 0; d < degree && shape.arity > 0; ++d) {
        ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(shape.arity) - 1))];
      }
      terms.push_back(Term{std::move(e), random_scalar(rng, shape)});
    }
    MPoly p = MPoly::from_terms(shape.arity, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

MPoly random_doubly_homogeneous(Rng& rng, const std::vector<int>& degrees, int max_terms) {
  const std::size_t n = degrees.size();
  PolyShape coeffs;
  coeffs.coeff_bound = 5;
  while (true) {
    const long count = rng.uniform(1, max_terms);
    std::vector<Term> terms;
    for (long k = 0; k < count; ++k) {
      Exponents e(2 * n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        const long a = rng.uniform(0, degrees[j]);
        e[j] = static_cast<Exponent>(a);
        e[n + j] = static_cast<Exponent>(degrees[j] - a);
      }
      terms.push_back(Term{std::move(e), random_scalar(rng, coeffs)});
    }
    MPoly p = MPoly::from_terms(2 * n, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

}  // namespace moment_forge::selftest
