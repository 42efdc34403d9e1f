#include "moment_forge/functionals.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "moment_forge/combinatorics.hpp"
#include "moment_forge/errors.hpp"

namespace moment_forge {

std::string_view to_string(FunctionalKind kind) noexcept {
  switch (kind) {
    case FunctionalKind::gaussian:
      return "gaussian";
    case FunctionalKind::hermite_pairing:
      return "hermite_pairing";
    case FunctionalKind::halfdisk:
      return "halfdisk";
    case FunctionalKind::torus_ct:
      return "torus_ct";
  }
  return "unknown";
}

std::optional<FunctionalKind> parse_functional(std::string_view name) noexcept {
  if (name == "gaussian") return FunctionalKind::gaussian;
  if (name == "hermite_pairing" || name == "pairing") return FunctionalKind::hermite_pairing;
  if (name == "halfdisk") return FunctionalKind::halfdisk;
  if (name == "torus_ct" || name == "torus") return FunctionalKind::torus_ct;
  return std::nullopt;
}

GaussRat gaussian_expectation(const MPoly& p) {
  mpq_class re, im;
  mpz_class weight;
  for (const Term& t : p.terms()) {
    bool even = true;
    weight = 1;
    for (Exponent e : t.exponents) {
      if (e % 2 != 0) {
        even = false;
        break;
      }
      if (e > 2) weight *= double_factorial(e - 1);
    }
    if (!even) continue;
    re += t.coeff.re() * weight;
    if (!t.coeff.is_real()) im += t.coeff.im() * weight;
  }
  return GaussRat(std::move(re), std::move(im));
}

namespace {

std::size_t half_arity(const MPoly& p, const char* what) {
  if (p.arity() % 2 != 0) {
    throw UsageError(std::string(what) + ": expected an even arity 2n split as (w, z), got " +
                     std::to_string(p.arity()));
  }
  return p.arity() / 2;
}

}  // namespace

MPoly apply_en(const MPoly& p) {
  const std::size_t n = half_arity(p, "apply_en");
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    Exponents z(n);
    mpz_class falling = 1;
    bool vanishes = false;
    for (std::size_t j = 0; j < n && !vanishes; ++j) {
      const Exponent order = t.exponents[j];
      const Exponent power = t.exponents[n + j];
      if (order > power) {
        vanishes = true;
        break;
      }
      // d^order/dz^order z^power = power!/(power-order)! z^(power-order)
      for (Exponent k = power; k > power - order; --k) falling *= static_cast<unsigned long>(k);
      z[j] = power - order;
    }
    if (vanishes) continue;
    out.push_back(Term{std::move(z), t.coeff * GaussRat(falling)});
  }
  return MPoly::from_terms(n, std::move(out));
}

GaussRat hermite_pairing(const MPoly& p) {
  const std::size_t n = half_arity(p, "hermite_pairing");
  GaussRat sum;
  for (const Term& t : p.terms()) {
    mpz_class weight = 1;
    bool matched = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.exponents[j] != t.exponents[n + j]) {
        matched = false;
        break;
      }
      weight *= factorial(t.exponents[j]);
    }
    if (matched) sum += t.coeff * GaussRat(weight);
  }
  return sum;
}

GaussRat hermite_pairing_via_en(const MPoly& p) {
  const MPoly derived = apply_en(p);
  const std::vector<GaussRat> origin(derived.arity());
  return evaluate(derived, origin);
}

GaussRat wz_expectation(std::span<const Exponent> alpha, std::span<const Exponent> beta) {
  if (alpha.size() != beta.size()) {
    throw UsageError("wz_expectation: exponent vectors of lengths " +
                     std::to_string(alpha.size()) + " and " + std::to_string(beta.size()));
  }
  const std::size_t n = alpha.size();
  const std::size_t arity = 2 * n;  // x_1..x_n, y_1..y_n
  MPoly product = MPoly::constant(arity, GaussRat(1));
  for (std::size_t j = 0; j < n; ++j) {
    if (alpha[j] < 0 || beta[j] < 0) throw UsageError("wz_expectation: negative exponent");
    const MPoly x = MPoly::variable(arity, j);
    const MPoly iy = MPoly::variable(arity, n + j).scaled(GaussRat::i());
    const MPoly w = x - iy;
    const MPoly z = x + iy;
    product = product * w.pow(static_cast<unsigned long>(alpha[j])) *
              z.pow(static_cast<unsigned long>(beta[j]));
  }
  return gaussian_expectation(product);
}

PiScalar halfdisk_monomial(Exponent a, Exponent b) {
  if (a < 0 || b < 0) throw UsageError("halfdisk: negative exponent");
  if (a % 2 != 0) return PiScalar();

  static std::mutex mutex;
  static std::map<std::pair<Exponent, Exponent>, PiScalar> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
  }

  // Angular part over [0, pi]: twice the quarter-period Wallis integral
  //   int_0^{pi/2} cos^a sin^b = (a-1)!! (b-1)!! / (a+b)!!  (times pi/2 if b even).
  // Radial part: int_0^1 r^{a+b+1} dr = 1/(a+b+2).
  mpq_class wallis(double_factorial(a - 1) * double_factorial(b - 1),
                   double_factorial(a + b) * (a + b + 2));
  wallis.canonicalize();
  PiScalar value;
  if (b % 2 == 0) {
    value.pi = GaussRat(wallis);
  } else {
    value.rat = GaussRat(mpq_class(2 * wallis));
  }

  std::lock_guard lock(mutex);
  memo.emplace(std::make_pair(a, b), value);
  return value;
}

PiScalar halfdisk_integral(const MPoly& p) {
  if (p.arity() != 2) {
    throw UsageError("halfdisk: expected a polynomial in exactly 2 variables (x, y), got arity " +
                     std::to_string(p.arity()));
  }
  PiScalar sum;
  for (const Term& t : p.terms()) {
    const PiScalar m = halfdisk_monomial(t.exponents[0], t.exponents[1]);
    if (!m.is_zero()) sum += m * t.coeff;
  }
  return sum;
}

GaussRat torus_ct(const LaurentPoly& f) { return constant_term(f); }

}  // namespace moment_forge
