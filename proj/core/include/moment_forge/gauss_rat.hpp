#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace moment_forge {

/// Exact element a + b*i of Q(i). Both parts are kept canonical (lowest
/// terms, positive denominator), so equality is structural.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRat(const mpz_class& value) : re_(value) {}  // NOLINT
  GaussRat(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  /// True when both parts have denominator 1.
  bool is_gaussian_integer() const noexcept {
    return re_.get_den() == 1 && im_.get_den() == 1;
  }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// |z|^2 = a^2 + b^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o);
  /// Throws std::domain_error on division by zero.
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  /// z^k for k >= 0; negative k inverts (throws on zero base).
  GaussRat pow(long k) const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical exact string: "a/b" when real, otherwise "a/b+c/d*i",
  /// "a/b-c/d*i" or "c/d*i" (zero parts and denominators 1 are omitted).
  /// Accepted back by parse().
  std::string to_string() const;
  /// Inverse of to_string(). Throws UsageError on malformed input.
  static GaussRat parse(const std::string& text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Exact value q0 + q1*pi with q0, q1 in Q(i). Since pi is transcendental,
/// zero iff both components are zero.
struct PiScalar {
  GaussRat rat;
  GaussRat pi;

  PiScalar() = default;
  PiScalar(GaussRat r) : rat(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  PiScalar(GaussRat r, GaussRat p) : rat(std::move(r)), pi(std::move(p)) {}

  bool is_zero() const noexcept { return rat.is_zero() && pi.is_zero(); }
  bool is_rational() const noexcept { return pi.is_zero(); }

  PiScalar& operator+=(const PiScalar& o) {
    rat += o.rat;
    pi += o.pi;
    return *this;
  }
  PiScalar& operator-=(const PiScalar& o) {
    rat -= o.rat;
    pi -= o.pi;
    return *this;
  }
  PiScalar& operator*=(const GaussRat& c) {
    rat *= c;
    pi *= c;
    return *this;
  }
  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
  friend PiScalar operator*(PiScalar a, const GaussRat& c) { return a *= c; }
  friend PiScalar operator*(const GaussRat& c, PiScalar a) { return a *= c; }
  friend bool operator==(const PiScalar& a, const PiScalar& b) {
    return a.rat == b.rat && a.pi == b.pi;
  }
  friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }

  std::complex<double> to_complex() const;

  /// "a/b+c/d*i + (e/f+g/h*i)*pi"; the pi part is omitted when zero and
  /// the rational part is omitted when zero but pi is not.
  std::string to_string() const;
  static PiScalar parse(const std::string& text);
};

}  // namespace moment_forge
