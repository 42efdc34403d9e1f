#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "moment_forge/gauss_rat.hpp"
#include "moment_forge/polynomial.hpp"

namespace moment_forge {

/// The four exact linear functionals.
///
///   gaussian         E(P(X)), X i.i.d. standard normal; any arity.
///   hermite_pairing  w^a z^b -> a! [a = b]; even arity 2n split as (w, z).
///   halfdisk         Lebesgue integral over {y >= 0, x^2 + y^2 <= 1}; arity 2.
///   torus_ct         normalized Haar average over (S^1)^n, i.e. the
///                    constant term; Laurent polynomials.
enum class FunctionalKind { gaussian, hermite_pairing, halfdisk, torus_ct };

std::string_view to_string(FunctionalKind kind) noexcept;
std::optional<FunctionalKind> parse_functional(std::string_view name) noexcept;

/// E(P(X)) via x^a -> prod (a_i - 1)!! on even exponent vectors, 0 otherwise.
GaussRat gaussian_expectation(const MPoly& p);

/// Differential-operator pairing on a (w, z) polynomial of arity 2n:
/// w^a z^b -> d^a/dz^a (z^b). The result lives in the n z-variables.
/// Throws UsageError on odd arity.
MPoly apply_en(const MPoly& p);

/// F_n(P) = E_n(P)|_{z=0}, computed on monomials by the a = b rule.
GaussRat hermite_pairing(const MPoly& p);

/// Same value as hermite_pairing, through apply_en and evaluation at z = 0.
/// Slower; kept as an independent route for cross-checks.
GaussRat hermite_pairing_via_en(const MPoly& p);

/// Scaled W/Z moment E(prod_j (x_j - i y_j)^{a_j} (x_j + i y_j)^{b_j}) for
/// X, Y i.i.d. standard normal. Equals 2^{(|a|+|b|)/2} F_n(w^a z^b); the
/// 1/sqrt(2) normalization is left out to stay inside Q(i).
GaussRat wz_expectation(std::span<const Exponent> alpha, std::span<const Exponent> beta);

/// Integral of x^a y^b over the upper half unit disk.
PiScalar halfdisk_monomial(Exponent a, Exponent b);

/// Integral of P over the upper half unit disk. Throws UsageError unless
/// arity is 2.
PiScalar halfdisk_integral(const MPoly& p);

/// Normalized Haar integral over the torus, i.e. constant_term(f).
GaussRat torus_ct(const LaurentPoly& f);

}  // namespace moment_forge
