#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "moment_forge/gauss_rat.hpp"
#include "moment_forge/monomial.hpp"

namespace moment_forge {

enum class Ring { polynomial, laurent };

struct Term {
  Exponents exponents;
  GaussRat coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q(i) in a fixed number of variables.
///
/// Terms are stored in descending graded-lex order with no zero
/// coefficients, so two polynomials are equal iff their term lists are.
/// In the polynomial ring every exponent is non-negative; the Laurent ring
/// admits negative exponents. Values are immutable once built; all
/// arithmetic returns new objects.
template <Ring R>
class BasicPoly {
 public:
  static constexpr Ring ring = R;

  explicit BasicPoly(std::size_t arity = 0) : arity_(arity) {}

  static BasicPoly constant(std::size_t arity, GaussRat c);
  static BasicPoly variable(std::size_t arity, std::size_t index);
  static BasicPoly monomial(Exponents exponents, GaussRat c = GaussRat(1));
  /// Merges repeated exponents, drops zeros, sorts. Throws UsageError on a
  /// wrong exponent length or (polynomial ring) a negative exponent.
  static BasicPoly from_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const noexcept { return arity_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True for zero and for nonzero constants.
  bool is_constant() const noexcept;

  GaussRat coefficient(std::span<const Exponent> exponents) const;
  GaussRat constant_coefficient() const;
  /// Largest signed total degree; nullopt for the zero polynomial.
  std::optional<std::int64_t> total_degree() const;

  BasicPoly operator-() const;
  BasicPoly& operator+=(const BasicPoly& o) { return *this = *this + o; }
  BasicPoly& operator-=(const BasicPoly& o) { return *this = *this - o; }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) { return add(a, b, false); }
  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) { return add(a, b, true); }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) { return multiply(a, b); }
  friend BasicPoly operator*(const GaussRat& c, const BasicPoly& p) { return p.scaled(c); }
  friend BasicPoly operator*(const BasicPoly& p, const GaussRat& c) { return p.scaled(c); }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

  BasicPoly scaled(const GaussRat& c) const;
  /// P^m by repeated squaring; P^0 = 1.
  BasicPoly pow(unsigned long m) const;

 private:
  static BasicPoly add(const BasicPoly& a, const BasicPoly& b, bool subtract);
  static BasicPoly multiply(const BasicPoly& a, const BasicPoly& b);

  std::size_t arity_;
  std::vector<Term> terms_;
};

using MPoly = BasicPoly<Ring::polynomial>;
using LaurentPoly = BasicPoly<Ring::laurent>;

extern template class BasicPoly<Ring::polynomial>;
extern template class BasicPoly<Ring::laurent>;

LaurentPoly to_laurent(const MPoly& p);
/// Throws UsageError if any exponent is negative.
MPoly to_polynomial(const LaurentPoly& p);

/// Coefficient of the zero exponent vector. For a Laurent polynomial in
/// torus variables this is the normalized Haar average over the torus.
GaussRat constant_term(const LaurentPoly& f);

/// Replaces z_j by z_j^{-1} for every j with mask[j] set.
LaurentPoly invert_variables(const LaurentPoly& f, const std::vector<bool>& mask);

/// Replaces variable j by images[j]. All images share one arity, which
/// becomes the arity of the result. A negative exponent in the source
/// requires the corresponding image to be a single nonzero term.
template <Ring R, Ring S>
BasicPoly<S> substitute(const BasicPoly<R>& p, std::span<const BasicPoly<S>> images);

/// Moves variable j of p to position positions[j] in a ring of new_arity
/// variables.
template <Ring R>
BasicPoly<R> embed(const BasicPoly<R>& p, std::size_t new_arity,
                   std::span<const std::size_t> positions);

/// P(..., x_{first+k} + offsets[k], ...).
MPoly shift(const MPoly& p, std::size_t first, std::span<const GaussRat> offsets);
/// Shifts the trailing offsets.size() variables (the z-block of a (w, z)
/// polynomial).
MPoly shift(const MPoly& p, std::span<const GaussRat> offsets);

/// Full evaluation at a point. Throws UsageError on a dimension mismatch
/// or a negative power of zero.
template <Ring R>
GaussRat evaluate(const BasicPoly<R>& p, std::span<const GaussRat> point);

/// Dense row-major n x n matrix.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t n, std::vector<T> entries);

  std::size_t dimension() const noexcept { return n_; }
  const T& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  std::span<const T> entries() const noexcept { return entries_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> entries_;
};

/// P(Mx) with x_j replaced by the j-th entry of Mx.
MPoly substitute_linear(const MPoly& p, const SquareMatrix<GaussRat>& m);
/// P(M(t)x) for M with entries in Q(i)[t, t^-1] (arity-1 Laurent
/// polynomials). The result has arity n + 1 with t as variable 0 followed
/// by x_1..x_n.
LaurentPoly substitute_linear(const MPoly& p, const SquareMatrix<LaurentPoly>& m);

}  // namespace moment_forge
