#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "moment_forge/polynomial.hpp"

// Brute-force reference computations. They share the scalar type with the
// library but none of its polynomial kernels: terms live in an ordered map
// and products are formed pair by pair.
namespace moment_forge::selftest::oracle {

using TermMap = std::map<Exponents, GaussRat>;

TermMap to_map(const MPoly& p);
MPoly from_map(std::size_t arity, const TermMap& terms);

TermMap multiply(const TermMap& a, const TermMap& b);
/// P^m by m - 1 successive multiplications.
TermMap naive_pow(const TermMap& p, std::size_t arity, unsigned m);

/// (k-1)!! by a plain loop; (-1)!! = 1.
mpz_class odd_double_factorial(long k_minus_one);
mpz_class plain_factorial(long n);

/// E(P(X)) monomial by monomial from the double-factorial rule.
GaussRat gaussian(const TermMap& p);

/// E((x^2 + y^2 + x y + 1)^m) by the multinomial expansion over
/// (a, b, c, d) with a + b + c + d = m.
mpz_class gaussian_quartic_power(unsigned m);

}  // namespace moment_forge::selftest::oracle
