#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "moment_forge/functionals.hpp"
#include "moment_forge/gauss_rat.hpp"
#include "moment_forge/polynomial.hpp"

namespace moment_forge {

using AnyPoly = std::variant<MPoly, LaurentPoly>;

/// Default truncation bound M for "m >> 0" statements.
inline constexpr int kDefaultWindow = 32;

std::size_t arity_of(const AnyPoly& p) noexcept;

/// Throws UsageError when the functional cannot be applied to p.
void check_compatible(FunctionalKind kind, const AnyPoly& p);

/// Applies the functional; gaussian, hermite_pairing and torus_ct values
/// have a zero pi part.
PiScalar apply_functional(FunctionalKind kind, const AnyPoly& p);

/// L(P^m) for m = 1..bound. values[m - 1] holds the m-th value.
struct VanishingProfile {
  FunctionalKind functional = FunctionalKind::gaussian;
  AnyPoly poly;
  int bound = 0;
  std::vector<PiScalar> values;
  std::optional<int> first_nonzero;
  bool all_zero = true;

  const PiScalar& value_at(int m) const { return values.at(static_cast<std::size_t>(m - 1)); }
};

/// Powers are built incrementally (P^{m+1} = P^m * P).
VanishingProfile vanish_scan(const AnyPoly& p, FunctionalKind kind, int bound = kDefaultWindow);

/// Profile of P together with the companion sequence L(P^m Q).
///
/// eventually_zero_up_to_bound holds iff the companion is zero from some
/// m0 <= bound through bound. A window in which every L(P^m) vanishes but
/// the companion does not eventually vanish is a counterexample candidate
/// for the Mathieu-Zhao property of ker L.
struct MZProbeReport {
  VanishingProfile profile;
  AnyPoly companion_poly;
  std::vector<PiScalar> companion;
  std::optional<int> last_nonzero;
  bool eventually_zero_up_to_bound = true;

  const PiScalar& companion_at(int m) const {
    return companion.at(static_cast<std::size_t>(m - 1));
  }
  bool counterexample_candidate() const {
    return profile.all_zero && !eventually_zero_up_to_bound;
  }
};

MZProbeReport mz_probe(const AnyPoly& p, const AnyPoly& q, FunctionalKind kind,
                       int bound = kDefaultWindow);

enum class CertStatus { certified, inconclusive, failed };
std::string_view to_string(CertStatus status) noexcept;

/// Outcome of the Frobenius congruence E(F^p) = F(0) (mod p).
struct CertResult {
  unsigned long prime = 0;
  unsigned long residue = 0;   // E(F^p) mod p, in [0, p)
  unsigned long expected = 0;  // F(0) mod p, in [0, p)
  bool valid = false;          // residue == expected
  GaussRat exact_value;        // E(F^p)
  CertStatus status = CertStatus::failed;
};

/// Requires integer coefficients and an odd prime p (UsageError otherwise).
/// When p does not divide F(0), a valid congruence certifies E(F^p) != 0;
/// when it does, the result is inconclusive.
CertResult frobenius_certificate(const MPoly& f, unsigned long p);

using VariablePair = std::pair<std::size_t, std::size_t>;

/// (x_k, y_k) = (variable k, variable n + k) for arity 2n.
std::vector<VariablePair> default_pairing(std::size_t arity);

/// P = (prod_k r_k^{d_k}) F_L under x_k = r_k cos t_k, y_k = r_k sin t_k,
/// with cos and sin written through z_k = e^{i t_k}.
struct DoubleHomogReduction {
  std::vector<VariablePair> pairs;
  std::vector<int> degrees;  // d_k
  LaurentPoly angular;       // F_L in z_1..z_n

  /// prod_k 2^{m d_k / 2} (m d_k / 2)!, defined when every m d_k is even.
  /// E(P^m) = A_m * CT(F_L^m) for that constant.
  std::optional<mpz_class> radial_constant(int m) const;
  std::string radial_constant_formula() const;
};

/// Throws UsageError if the pairs do not partition the variables or P is
/// not homogeneous in some pair (the message names the pair). Optional
/// names are used in messages.
DoubleHomogReduction double_homog_reduce(const MPoly& p, std::vector<VariablePair> pairs,
                                         const std::vector<std::string>& names = {});
DoubleHomogReduction double_homog_reduce(const MPoly& p);

struct CrosscheckRow {
  int m = 0;
  GaussRat gaussian;                  // E(P^m)
  GaussRat torus;                     // CT(F_L^m)
  std::optional<mpz_class> constant;  // A_m when every m d_k is even
  bool vanishing_equivalent = false;
  std::optional<bool> ratio_holds;

  bool holds() const { return vanishing_equivalent && ratio_holds.value_or(true); }
};

struct CrosscheckReport {
  DoubleHomogReduction reduction;
  std::vector<CrosscheckRow> rows;
  bool all_hold = true;
};

CrosscheckReport gaussian_torus_crosscheck(const MPoly& p, std::vector<VariablePair> pairs,
                                           int bound = kDefaultWindow,
                                           const std::vector<std::string>& names = {});

/// Algebraic one-parameter subgroup t -> lambda(t) of O_n, given by a
/// matrix of Laurent polynomials in t. Construction verifies
/// lambda * lambda^T = I and throws UsageError naming the first offending
/// entry otherwise.
class OnePS {
 public:
  explicit OnePS(SquareMatrix<LaurentPoly> matrix);

  static OnePS identity(std::size_t n);
  /// [[a, b], [-b, a]] with a = (t + 1/t)/2, b = (t - 1/t)/(2i).
  static OnePS rotation();

  const SquareMatrix<LaurentPoly>& matrix() const noexcept { return matrix_; }
  std::size_t dimension() const noexcept { return matrix_.dimension(); }
  /// t -> lambda(1/t).
  OnePS inverse_parameter() const;

 private:
  SquareMatrix<LaurentPoly> matrix_;
};

struct OnePSReport {
  LaurentPoly substituted;                       // P(lambda(t) x); t is variable 0
  std::optional<std::int64_t> min_t_exponent;    // nullopt iff P = 0
  bool member = false;                           // P(lambda(t) x) in t C[t][x]
  LaurentPoly substituted_inverse;               // same for lambda(1/t)
  std::optional<std::int64_t> min_t_exponent_inverse;
  bool member_inverse = false;
};

OnePSReport one_ps_check(const MPoly& p, const OnePS& lambda);

}  // namespace moment_forge
