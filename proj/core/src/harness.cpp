#include "moment_forge/harness.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "moment_forge/combinatorics.hpp"
#include "moment_forge/errors.hpp"
#include "moment_forge/io.hpp"

namespace moment_forge {

namespace {

bool has_negative_exponent(const LaurentPoly& p) {
  for (const Term& t : p.terms()) {
    for (Exponent e : t.exponents) {
      if (e < 0) return true;
    }
  }
  return false;
}

// Brings p into the ring the functional is evaluated in: Laurent for the
// torus functional, ordinary polynomials for the rest.
AnyPoly normalized(FunctionalKind kind, const AnyPoly& p) {
  check_compatible(kind, p);
  if (kind == FunctionalKind::torus_ct) {
    if (const auto* mp = std::get_if<MPoly>(&p)) return to_laurent(*mp);
    return p;
  }
  if (const auto* lp = std::get_if<LaurentPoly>(&p)) return to_polynomial(*lp);
  return p;
}

PiScalar evaluate_on(FunctionalKind kind, const MPoly& p) {
  switch (kind) {
    case FunctionalKind::gaussian:
      return gaussian_expectation(p);
    case FunctionalKind::hermite_pairing:
      return hermite_pairing(p);
    case FunctionalKind::halfdisk:
      return halfdisk_integral(p);
    case FunctionalKind::torus_ct:
      return torus_ct(to_laurent(p));
  }
  throw UsageError("unknown functional");
}

PiScalar evaluate_on(FunctionalKind kind, const LaurentPoly& p) {
  if (kind != FunctionalKind::torus_ct) return evaluate_on(kind, to_polynomial(p));
  return torus_ct(p);
}

void require_bound(int bound) {
  if (bound < 1) throw UsageError("window bound M must be at least 1");
}

// Fills values[m-1] = L(P^m) and, when q is given, companion[m-1] = L(P^m Q).
template <class Poly>
void scan_powers(FunctionalKind kind, const Poly& p, const Poly* q, int bound,
                 std::vector<PiScalar>& values, std::vector<PiScalar>* companion) {
  values.reserve(static_cast<std::size_t>(bound));
  if (companion) companion->reserve(static_cast<std::size_t>(bound));
  Poly power = p;
  for (int m = 1; m <= bound; ++m) {
    values.push_back(evaluate_on(kind, power));
    if (companion) companion->push_back(evaluate_on(kind, power * *q));
    if (m < bound && !power.is_zero()) power = power * p;
  }
}

void summarize(VanishingProfile& profile) {
  profile.first_nonzero.reset();
  for (std::size_t k = 0; k < profile.values.size(); ++k) {
    if (!profile.values[k].is_zero()) {
      profile.first_nonzero = static_cast<int>(k + 1);
      break;
    }
  }
  profile.all_zero = !profile.first_nonzero.has_value();
}

std::string pair_name(const VariablePair& pair, const std::vector<std::string>& names) {
  auto name = [&](std::size_t v) {
    return v < names.size() ? names[v] : "var" + std::to_string(v);
  };
  return "(" + name(pair.first) + ", " + name(pair.second) + ")";
}

}  // namespace

std::size_t arity_of(const AnyPoly& p) noexcept {
  return std::visit([](const auto& poly) { return poly.arity(); }, p);
}

void check_compatible(FunctionalKind kind, const AnyPoly& p) {
  if (kind != FunctionalKind::torus_ct) {
    if (const auto* lp = std::get_if<LaurentPoly>(&p); lp && has_negative_exponent(*lp)) {
      throw UsageError(std::string(to_string(kind)) +
                       " requires an ordinary polynomial (no negative exponents)");
    }
  }
  const std::size_t n = arity_of(p);
  switch (kind) {
    case FunctionalKind::gaussian:
    case FunctionalKind::torus_ct:
      return;
    case FunctionalKind::hermite_pairing:
      if (n % 2 != 0 || n == 0) {
        throw UsageError("hermite_pairing requires an even arity 2n split as (w, z), got " +
                         std::to_string(n));
      }
      return;
    case FunctionalKind::halfdisk:
      if (n != 2) {
        throw UsageError("halfdisk requires exactly 2 variables (x, y), got " + std::to_string(n));
      }
      return;
  }
}

PiScalar apply_functional(FunctionalKind kind, const AnyPoly& p) {
  const AnyPoly q = normalized(kind, p);
  return std::visit([&](const auto& poly) { return evaluate_on(kind, poly); }, q);
}

VanishingProfile vanish_scan(const AnyPoly& p, FunctionalKind kind, int bound) {
  require_bound(bound);
  VanishingProfile profile;
  profile.functional = kind;
  profile.bound = bound;
  profile.poly = normalized(kind, p);
  std::visit(
      [&](const auto& poly) {
        using Poly = std::decay_t<decltype(poly)>;
        scan_powers<Poly>(kind, poly, nullptr, bound, profile.values, nullptr);
      },
      profile.poly);
  summarize(profile);
  return profile;
}

MZProbeReport mz_probe(const AnyPoly& p, const AnyPoly& q, FunctionalKind kind, int bound) {
  require_bound(bound);
  if (arity_of(p) != arity_of(q)) {
    throw UsageError("mz_probe: P and Q have different arities (" +
                     std::to_string(arity_of(p)) + " vs " + std::to_string(arity_of(q)) + ")");
  }
  MZProbeReport report;
  report.profile.functional = kind;
  report.profile.bound = bound;
  report.profile.poly = normalized(kind, p);
  report.companion_poly = normalized(kind, q);
  std::visit(
      [&](const auto& poly) {
        using Poly = std::decay_t<decltype(poly)>;
        const Poly& companion = std::get<Poly>(report.companion_poly);
        scan_powers<Poly>(kind, poly, &companion, bound, report.profile.values, &report.companion);
      },
      report.profile.poly);
  summarize(report.profile);
  for (std::size_t k = report.companion.size(); k > 0; --k) {
    if (!report.companion[k - 1].is_zero()) {
      report.last_nonzero = static_cast<int>(k);
      break;
    }
  }
  report.eventually_zero_up_to_bound =
      !report.last_nonzero.has_value() || *report.last_nonzero < bound;
  return report;
}

std::string_view to_string(CertStatus status) noexcept {
  switch (status) {
    case CertStatus::certified:
      return "certified";
    case CertStatus::inconclusive:
      return "inconclusive";
    case CertStatus::failed:
      return "failed";
  }
  return "unknown";
}

namespace {

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

unsigned long residue_mod(const mpq_class& integer_value, unsigned long p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), integer_value.get_num_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

CertResult frobenius_certificate(const MPoly& f, unsigned long p) {
  if (!is_odd_prime(p)) {
    throw UsageError("frobenius_certificate: p = " + std::to_string(p) + " is not an odd prime");
  }
  for (const Term& t : f.terms()) {
    if (!t.coeff.is_real() || t.coeff.re().get_den() != 1) {
      throw UsageError("frobenius_certificate: coefficients must be rational integers, found " +
                       t.coeff.to_string());
    }
  }
  CertResult result;
  result.prime = p;
  result.exact_value = gaussian_expectation(f.pow(p));
  result.residue = residue_mod(result.exact_value.re(), p);
  result.expected = residue_mod(f.constant_coefficient().re(), p);
  result.valid = result.residue == result.expected;
  if (!result.valid) {
    result.status = CertStatus::failed;
  } else if (result.expected == 0) {
    result.status = CertStatus::inconclusive;
  } else {
    result.status = CertStatus::certified;
  }
  return result;
}

std::vector<VariablePair> default_pairing(std::size_t arity) {
  if (arity == 0 || arity % 2 != 0) {
    throw UsageError("pairing (x_k, y_k) needs an even number of variables, got " +
                     std::to_string(arity));
  }
  const std::size_t n = arity / 2;
  std::vector<VariablePair> pairs;
  for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n + k);
  return pairs;
}

std::optional<mpz_class> DoubleHomogReduction::radial_constant(int m) const {
  mpz_class a = 1;
  for (int d : degrees) {
    const long md = static_cast<long>(m) * d;
    if (md % 2 != 0) return std::nullopt;
    mpz_class two_power;
    mpz_ui_pow_ui(two_power.get_mpz_t(), 2, static_cast<unsigned long>(md / 2));
    a *= two_power * factorial(md / 2);
  }
  return a;
}

std::string DoubleHomogReduction::radial_constant_formula() const {
  std::string d;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    if (k) d += ", ";
    d += std::to_string(degrees[k]);
  }
  return "A_m = prod_k 2^(m*d_k/2) * (m*d_k/2)! with d = (" + d + ")";
}

DoubleHomogReduction double_homog_reduce(const MPoly& p, std::vector<VariablePair> pairs,
                                         const std::vector<std::string>& names) {
  const std::size_t arity = p.arity();
  std::vector<int> seen(arity, 0);
  for (const VariablePair& pair : pairs) {
    if (pair.first >= arity || pair.second >= arity || pair.first == pair.second) {
      throw UsageError("double_homog_reduce: invalid pair " + pair_name(pair, names));
    }
    ++seen[pair.first];
    ++seen[pair.second];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    throw UsageError("double_homog_reduce: pairs must partition the variables");
  }

  DoubleHomogReduction red;
  red.pairs = std::move(pairs);
  const std::size_t n = red.pairs.size();
  red.degrees.assign(n, 0);
  red.angular = LaurentPoly(n);
  if (p.is_zero()) return red;

  const auto terms = p.terms();
  for (std::size_t k = 0; k < n; ++k) {
    const auto [xv, yv] = red.pairs[k];
    const Exponent d = terms[0].exponents[xv] + terms[0].exponents[yv];
    for (const Term& t : terms) {
      const Exponent e = t.exponents[xv] + t.exponents[yv];
      if (e != d) {
        throw UsageError("not homogeneous in pair " + pair_name(red.pairs[k], names) +
                         ": found degrees " + std::to_string(d) + " and " + std::to_string(e));
      }
    }
    red.degrees[k] = d;
  }

  // cos = (z + 1/z)/2, sin = (z - 1/z)/(2i) = -i/2 (z - 1/z)
  const GaussRat half = GaussRat(mpq_class(1, 2));
  const GaussRat minus_half_i = GaussRat(mpq_class(0), mpq_class(-1, 2));
  std::vector<LaurentPoly> images(arity, LaurentPoly(n));
  for (std::size_t k = 0; k < n; ++k) {
    Exponents up(n, 0), down(n, 0);
    up[k] = 1;
    down[k] = -1;
    const LaurentPoly z = LaurentPoly::monomial(up);
    const LaurentPoly z_inv = LaurentPoly::monomial(down);
    images[red.pairs[k].first] = (z + z_inv).scaled(half);
    images[red.pairs[k].second] = (z - z_inv).scaled(minus_half_i);
  }
  red.angular = substitute<Ring::polynomial, Ring::laurent>(p, images);
  return red;
}

DoubleHomogReduction double_homog_reduce(const MPoly& p) {
  return double_homog_reduce(p, default_pairing(p.arity()));
}

CrosscheckReport gaussian_torus_crosscheck(const MPoly& p, std::vector<VariablePair> pairs,
                                           int bound, const std::vector<std::string>& names) {
  require_bound(bound);
  CrosscheckReport report;
  report.reduction = double_homog_reduce(p, std::move(pairs), names);
  MPoly power = p;
  LaurentPoly angular_power = report.reduction.angular;
  for (int m = 1; m <= bound; ++m) {
    CrosscheckRow row;
    row.m = m;
    row.gaussian = gaussian_expectation(power);
    row.torus = torus_ct(angular_power);
    row.constant = report.reduction.radial_constant(m);
    row.vanishing_equivalent = row.gaussian.is_zero() == row.torus.is_zero();
    if (row.constant) row.ratio_holds = row.gaussian == GaussRat(*row.constant) * row.torus;
    report.all_hold = report.all_hold && row.holds();
    report.rows.push_back(std::move(row));
    if (m < bound) {
      power = power * p;
      angular_power = angular_power * report.reduction.angular;
    }
  }
  return report;
}

OnePS::OnePS(SquareMatrix<LaurentPoly> matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.dimension();
  if (n == 0) throw UsageError("one-parameter subgroup: empty matrix");
  for (const LaurentPoly& entry : matrix_.entries()) {
    if (entry.arity() != 1) {
      throw UsageError("one-parameter subgroup: entries must be Laurent polynomials in t");
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      LaurentPoly entry = LaurentPoly::constant(1, GaussRat(r == c ? -1 : 0));
      for (std::size_t k = 0; k < n; ++k) entry += matrix_(r, k) * matrix_(c, k);
      if (!entry.is_zero()) {
        throw UsageError("lambda is not orthogonal: (lambda*lambda^T - I)[" +
                         std::to_string(r + 1) + "][" + std::to_string(c + 1) +
                         "] = " + format_poly(entry, {"t"}));
      }
    }
  }
}

OnePS OnePS::identity(std::size_t n) {
  std::vector<LaurentPoly> entries;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      entries.push_back(LaurentPoly::constant(1, GaussRat(r == c ? 1 : 0)));
    }
  }
  return OnePS(SquareMatrix<LaurentPoly>(n, std::move(entries)));
}

OnePS OnePS::rotation() {
  const LaurentPoly t = LaurentPoly::monomial({1});
  const LaurentPoly t_inv = LaurentPoly::monomial({-1});
  const LaurentPoly a = (t + t_inv).scaled(GaussRat(mpq_class(1, 2)));
  const LaurentPoly b = (t - t_inv).scaled(GaussRat(mpq_class(0), mpq_class(-1, 2)));
  return OnePS(SquareMatrix<LaurentPoly>(2, {a, b, -b, a}));
}

OnePS OnePS::inverse_parameter() const {
  std::vector<LaurentPoly> entries;
  for (const LaurentPoly& e : matrix_.entries()) entries.push_back(invert_variables(e, {true}));
  return OnePS(SquareMatrix<LaurentPoly>(dimension(), std::move(entries)));
}

namespace {

std::optional<std::int64_t> min_t_exponent(const LaurentPoly& f) {
  if (f.is_zero()) return std::nullopt;
  std::int64_t low = std::numeric_limits<std::int64_t>::max();
  for (const Term& t : f.terms()) low = std::min<std::int64_t>(low, t.exponents[0]);
  return low;
}

}  // namespace

OnePSReport one_ps_check(const MPoly& p, const OnePS& lambda) {
  if (p.arity() != lambda.dimension()) {
    throw UsageError("one_ps_check: " + std::to_string(lambda.dimension()) + "x" +
                     std::to_string(lambda.dimension()) + " lambda for a polynomial of arity " +
                     std::to_string(p.arity()));
  }
  OnePSReport report;
  report.substituted = substitute_linear(p, lambda.matrix());
  report.min_t_exponent = min_t_exponent(report.substituted);
  report.member = !report.min_t_exponent || *report.min_t_exponent >= 1;
  report.substituted_inverse = substitute_linear(p, lambda.inverse_parameter().matrix());
  report.min_t_exponent_inverse = min_t_exponent(report.substituted_inverse);
  report.member_inverse = !report.min_t_exponent_inverse || *report.min_t_exponent_inverse >= 1;
  return report;
}

}  // namespace moment_forge
