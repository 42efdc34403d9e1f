#include "moment_forge/gauss_rat.hpp"

#include <numbers>
#include <regex>
#include <stdexcept>

#include "moment_forge/errors.hpp"

namespace moment_forge {

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  // Real operands dominate in practice; skip the cross terms when possible.
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

GaussRat GaussRat::pow(long k) const {
  if (k < 0) {
    if (is_zero()) throw std::domain_error("GaussRat: zero to a negative power");
    return (GaussRat(1) / *this).pow(-k);
  }
  GaussRat result(1);
  GaussRat base = *this;
  unsigned long e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string GaussRat::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out = sgn(re_) == 0 ? "" : re_.get_str();
  if (sgn(im_) > 0 && !out.empty()) {
    out += '+';
    out += im_.get_str();
  } else {
    out += im_.get_str();  // carries its '-'
  }
  out += "*i";
  return out;
}

GaussRat GaussRat::parse(const std::string& text) {
  // "a", "a+b*i" / "a-b*i", or "b*i" with an optional sign.
  static const std::regex kForm(
      R"(^(?:(-?[0-9]+(?:/[0-9]+)?)([+-])([0-9]+(?:/[0-9]+)?)\*i|(-?[0-9]+(?:/[0-9]+)?)|([+-]?)([0-9]+(?:/[0-9]+)?)\*i)$)");
  std::smatch m;
  if (!std::regex_match(text, m, kForm)) {
    throw UsageError("malformed exact scalar '" + text + "'");
  }
  auto rational = [&](const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw UsageError("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  };
  if (m[4].matched) return GaussRat(rational(m[4].str()));
  if (m[6].matched) {
    mpq_class im = rational(m[6].str());
    if (m[5].str() == "-") im = -im;
    return GaussRat(mpq_class(0), std::move(im));
  }
  mpq_class re = rational(m[1].str());
  mpq_class im = rational(m[3].str());
  if (m[2].str() == "-") im = -im;
  return GaussRat(std::move(re), std::move(im));
}

std::complex<double> PiScalar::to_complex() const {
  return rat.to_complex() + std::numbers::pi * pi.to_complex();
}

std::string PiScalar::to_string() const {
  if (pi.is_zero()) return rat.to_string();
  std::string pi_part = "(" + pi.to_string() + ")*pi";
  if (rat.is_zero()) return pi_part;
  return rat.to_string() + " + " + pi_part;
}

PiScalar PiScalar::parse(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) return PiScalar(GaussRat::parse(text));
  const std::string suffix = ")*pi";
  if (text.size() < open + suffix.size() + 1 ||
      text.compare(text.size() - suffix.size(), suffix.size(), suffix) != 0) {
    throw UsageError("malformed pi scalar '" + text + "'");
  }
  GaussRat pi_coeff =
      GaussRat::parse(text.substr(open + 1, text.size() - suffix.size() - open - 1));
  if (open == 0) return PiScalar(GaussRat(), std::move(pi_coeff));
  const std::string sep = " + ";
  if (open < sep.size() || text.compare(open - sep.size(), sep.size(), sep) != 0) {
    throw UsageError("malformed pi scalar '" + text + "'");
  }
  return PiScalar(GaussRat::parse(text.substr(0, open - sep.size())), std::move(pi_coeff));
}

}  // namespace moment_forge
