#include "moment_forge/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "moment_forge/errors.hpp"

namespace moment_forge {

namespace {

void require_same_arity(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw UsageError(std::string(what) + ": arity mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

bool term_greater(const Term& a, const Term& b) {
  return grlex_greater(a.exponents, b.exponents);
}

// Operand rescaled to Gaussian-integer coefficients:
// coeff[k] = (re[k] + im[k] i) / denom.
struct IntegralForm {
  mpz_class denom{1};
  std::vector<mpz_class> re;
  std::vector<mpz_class> im;
  bool complex = false;
};

IntegralForm integral_form(std::span<const Term> terms) {
  IntegralForm f;
  for (const Term& t : terms) {
    mpz_lcm(f.denom.get_mpz_t(), f.denom.get_mpz_t(), t.coeff.re().get_den_mpz_t());
    mpz_lcm(f.denom.get_mpz_t(), f.denom.get_mpz_t(), t.coeff.im().get_den_mpz_t());
    if (!t.coeff.is_real()) f.complex = true;
  }
  f.re.resize(terms.size());
  f.im.resize(terms.size());
  mpz_class scale;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const GaussRat& c = terms[k].coeff;
    mpz_divexact(scale.get_mpz_t(), f.denom.get_mpz_t(), c.re().get_den_mpz_t());
    f.re[k] = c.re().get_num() * scale;
    if (!c.is_real()) {
      mpz_divexact(scale.get_mpz_t(), f.denom.get_mpz_t(), c.im().get_den_mpz_t());
      f.im[k] = c.im().get_num() * scale;
    }
  }
  return f;
}

struct Accumulator {
  mpz_class re;
  mpz_class im;
};

class ProductAccumulate {
 public:
  ProductAccumulate(const IntegralForm& a, const IntegralForm& b) : a_(a), b_(b) {}

  void operator()(Accumulator& acc, std::size_t i, std::size_t j) const {
    const mpz_class& ar = a_.re[i];
    const mpz_class& br = b_.re[j];
    if (!a_.complex && !b_.complex) {
      mpz_addmul(acc.re.get_mpz_t(), ar.get_mpz_t(), br.get_mpz_t());
      return;
    }
    const mpz_class& ai = a_.im[i];
    const mpz_class& bi = b_.im[j];
    const bool ar0 = sgn(ar) == 0, ai0 = sgn(ai) == 0;
    const bool br0 = sgn(br) == 0, bi0 = sgn(bi) == 0;
    if (!ar0 && !br0) mpz_addmul(acc.re.get_mpz_t(), ar.get_mpz_t(), br.get_mpz_t());
    if (!ai0 && !bi0) mpz_submul(acc.re.get_mpz_t(), ai.get_mpz_t(), bi.get_mpz_t());
    if (!ar0 && !bi0) mpz_addmul(acc.im.get_mpz_t(), ar.get_mpz_t(), bi.get_mpz_t());
    if (!ai0 && !br0) mpz_addmul(acc.im.get_mpz_t(), ai.get_mpz_t(), br.get_mpz_t());
  }

 private:
  const IntegralForm& a_;
  const IntegralForm& b_;
};

// Mixed-radix packing of exponent vectors into one 64-bit key, chosen so
// that key(e + f) = key_a(e) + key_b(f) for exponents drawn from a and b.
struct Packing {
  std::vector<std::int64_t> offset;  // per-variable minimum of the product
  std::vector<std::uint64_t> range;
  std::vector<std::uint64_t> stride;
  std::uint64_t slots = 1;
};

std::optional<Packing> plan_packing(std::span<const Term> a, std::span<const Term> b,
                                    std::size_t arity, std::vector<std::int64_t>& min_a,
                                    std::vector<std::int64_t>& min_b) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> max_a(arity, kMin), max_b(arity, kMin);
  min_a.assign(arity, kMax);
  min_b.assign(arity, kMax);
  for (const Term& t : a) {
    for (std::size_t v = 0; v < arity; ++v) {
      min_a[v] = std::min<std::int64_t>(min_a[v], t.exponents[v]);
      max_a[v] = std::max<std::int64_t>(max_a[v], t.exponents[v]);
    }
  }
  for (const Term& t : b) {
    for (std::size_t v = 0; v < arity; ++v) {
      min_b[v] = std::min<std::int64_t>(min_b[v], t.exponents[v]);
      max_b[v] = std::max<std::int64_t>(max_b[v], t.exponents[v]);
    }
  }
  Packing p;
  p.offset.resize(arity);
  p.range.resize(arity);
  p.stride.resize(arity);
  constexpr std::uint64_t kKeyLimit = std::uint64_t{1} << 62;
  std::uint64_t slots = 1;
  for (std::size_t v = 0; v < arity; ++v) {
    p.offset[v] = min_a[v] + min_b[v];
    p.range[v] = static_cast<std::uint64_t>(max_a[v] + max_b[v] - p.offset[v] + 1);
    p.stride[v] = slots;
    if (p.range[v] > kKeyLimit / slots) return std::nullopt;
    slots *= p.range[v];
  }
  p.slots = slots;
  return p;
}

std::vector<std::uint64_t> pack_keys(std::span<const Term> terms,
                                     const std::vector<std::int64_t>& minimum,
                                     const Packing& p) {
  std::vector<std::uint64_t> keys(terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < p.stride.size(); ++v) {
      key += static_cast<std::uint64_t>(terms[k].exponents[v] - minimum[v]) * p.stride[v];
    }
    keys[k] = key;
  }
  return keys;
}

Exponents unpack_key(std::uint64_t key, const Packing& p) {
  Exponents e(p.stride.size());
  for (std::size_t v = 0; v < e.size(); ++v) {
    const std::uint64_t digit = (key / p.stride[v]) % p.range[v];
    e[v] = checked_exponent(static_cast<std::int64_t>(digit) + p.offset[v]);
  }
  return e;
}

void emit_term(std::vector<Term>& out, Exponents exponents, const Accumulator& acc,
               const mpz_class& denom) {
  if (sgn(acc.re) == 0 && sgn(acc.im) == 0) return;
  check_degree_cap(exponents);
  out.push_back(Term{std::move(exponents),
                     GaussRat(mpq_class(acc.re, denom), mpq_class(acc.im, denom))});
}

std::vector<Term> multiply_terms(std::span<const Term> a, std::span<const Term> b,
                                 std::size_t arity) {
  const IntegralForm fa = integral_form(a);
  const IntegralForm fb = integral_form(b);
  const mpz_class denom = fa.denom * fb.denom;
  const ProductAccumulate fma(fa, fb);
  std::vector<Term> out;

  std::vector<std::int64_t> min_a, min_b;
  const std::optional<Packing> packing = plan_packing(a, b, arity, min_a, min_b);
  if (packing) {
    const std::vector<std::uint64_t> keys_a = pack_keys(a, min_a, *packing);
    const std::vector<std::uint64_t> keys_b = pack_keys(b, min_b, *packing);
    const std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * b.size();
    constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 21;
    if (packing->slots <= kDenseLimit && packing->slots <= 8 * pairs + 1024) {
      std::vector<Accumulator> dense(packing->slots);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) fma(dense[keys_a[i] + keys_b[j]], i, j);
      }
      for (std::uint64_t key = 0; key < packing->slots; ++key) {
        const Accumulator& acc = dense[key];
        if (sgn(acc.re) == 0 && sgn(acc.im) == 0) continue;
        emit_term(out, unpack_key(key, *packing), acc, denom);
      }
    } else {
      std::unordered_map<std::uint64_t, std::size_t> index;
      index.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(pairs, 1U << 20)));
      std::vector<Accumulator> accs;
      std::vector<std::uint64_t> keys;
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          const std::uint64_t key = keys_a[i] + keys_b[j];
          auto [it, inserted] = index.try_emplace(key, accs.size());
          if (inserted) {
            accs.emplace_back();
            keys.push_back(key);
          }
          fma(accs[it->second], i, j);
        }
      }
      for (std::size_t k = 0; k < accs.size(); ++k) {
        emit_term(out, unpack_key(keys[k], *packing), accs[k], denom);
      }
    }
  } else {
    std::unordered_map<Exponents, Accumulator, ExponentsHash> accs;
    Exponents e(arity);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t v = 0; v < arity; ++v) {
          e[v] = checked_exponent(static_cast<std::int64_t>(a[i].exponents[v]) +
                                  b[j].exponents[v]);
        }
        fma(accs[e], i, j);
      }
    }
    for (auto& [exps, acc] : accs) emit_term(out, exps, acc, denom);
  }
  std::sort(out.begin(), out.end(), term_greater);
  return out;
}

}  // namespace

template <Ring R>
BasicPoly<R> BasicPoly<R>::constant(std::size_t arity, GaussRat c) {
  BasicPoly p(arity);
  if (!c.is_zero()) p.terms_.push_back(Term{Exponents(arity, 0), std::move(c)});
  return p;
}

template <Ring R>
BasicPoly<R> BasicPoly<R>::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) {
    throw UsageError("variable index " + std::to_string(index) + " out of range for arity " +
                     std::to_string(arity));
  }
  Exponents e(arity, 0);
  e[index] = 1;
  BasicPoly p(arity);
  p.terms_.push_back(Term{std::move(e), GaussRat(1)});
  return p;
}

template <Ring R>
BasicPoly<R> BasicPoly<R>::monomial(Exponents exponents, GaussRat c) {
  const std::size_t n = exponents.size();
  std::vector<Term> terms;
  terms.push_back(Term{std::move(exponents), std::move(c)});
  return from_terms(n, std::move(terms));
}

template <Ring R>
BasicPoly<R> BasicPoly<R>::from_terms(std::size_t arity, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.exponents.size() != arity) {
      throw UsageError("exponent vector of length " + std::to_string(t.exponents.size()) +
                       " in a ring of arity " + std::to_string(arity));
    }
    if constexpr (R == Ring::polynomial) {
      for (Exponent x : t.exponents) {
        if (x < 0) throw UsageError("negative exponent in polynomial ring");
      }
    }
    check_degree_cap(t.exponents);
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  BasicPoly p(arity);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coeff += t.coeff;
      continue;
    }
    if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    p.terms_.push_back(std::move(t));
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

template <Ring R>
bool BasicPoly<R>::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                     [](Exponent x) { return x == 0; });
}

template <Ring R>
GaussRat BasicPoly<R>::coefficient(std::span<const Exponent> exponents) const {
  if (exponents.size() != arity_) return GaussRat();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                             [](const Term& t, std::span<const Exponent> e) {
                               return grlex_greater(t.exponents, e);
                             });
  if (it != terms_.end() && std::equal(it->exponents.begin(), it->exponents.end(),
                                       exponents.begin(), exponents.end())) {
    return it->coeff;
  }
  return GaussRat();
}

template <Ring R>
GaussRat BasicPoly<R>::constant_coefficient() const {
  return coefficient(Exponents(arity_, 0));
}

template <Ring R>
std::optional<std::int64_t> BasicPoly<R>::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return moment_forge::total_degree(terms_.front().exponents);
}

template <Ring R>
BasicPoly<R> BasicPoly<R>::operator-() const {
  BasicPoly p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

template <Ring R>
BasicPoly<R> BasicPoly<R>::scaled(const GaussRat& c) const {
  if (c.is_zero()) return BasicPoly(arity_);
  BasicPoly p = *this;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

template <Ring R>
BasicPoly<R> BasicPoly<R>::add(const BasicPoly& a, const BasicPoly& b, bool subtract) {
  require_same_arity(a.arity_, b.arity_, subtract ? "subtract" : "add");
  BasicPoly out(a.arity_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  auto push_b = [&](const Term& t) {
    out.terms_.push_back(subtract ? Term{t.exponents, -t.coeff} : t);
  };
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const Term& ta = a.terms_[i];
    const Term& tb = b.terms_[j];
    if (grlex_greater(ta.exponents, tb.exponents)) {
      out.terms_.push_back(ta);
      ++i;
    } else if (grlex_greater(tb.exponents, ta.exponents)) {
      push_b(tb);
      ++j;
    } else {
      GaussRat c = subtract ? ta.coeff - tb.coeff : ta.coeff + tb.coeff;
      if (!c.is_zero()) out.terms_.push_back(Term{ta.exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) push_b(b.terms_[j]);
  return out;
}

template <Ring R>
BasicPoly<R> BasicPoly<R>::multiply(const BasicPoly& a, const BasicPoly& b) {
  require_same_arity(a.arity_, b.arity_, "multiply");
  BasicPoly out(a.arity_);
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_ = multiply_terms(a.terms_, b.terms_, a.arity_);
  return out;
}

template <Ring R>
BasicPoly<R> BasicPoly<R>::pow(unsigned long m) const {
  if (m == 0) return constant(arity_, GaussRat(1));
  std::optional<BasicPoly> result;
  BasicPoly base = *this;
  while (true) {
    if (m & 1UL) result = result ? *result * base : base;
    m >>= 1;
    if (m == 0) break;
    base = base * base;
  }
  return *result;
}

template class BasicPoly<Ring::polynomial>;
template class BasicPoly<Ring::laurent>;

LaurentPoly to_laurent(const MPoly& p) {
  return LaurentPoly::from_terms(p.arity(), std::vector<Term>(p.terms().begin(), p.terms().end()));
}

MPoly to_polynomial(const LaurentPoly& p) {
  return MPoly::from_terms(p.arity(), std::vector<Term>(p.terms().begin(), p.terms().end()));
}

GaussRat constant_term(const LaurentPoly& f) { return f.constant_coefficient(); }

LaurentPoly invert_variables(const LaurentPoly& f, const std::vector<bool>& mask) {
  if (mask.size() != f.arity()) throw UsageError("invert_variables: mask length mismatch");
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  for (Term& t : terms) {
    for (std::size_t v = 0; v < mask.size(); ++v) {
      if (mask[v]) t.exponents[v] = -t.exponents[v];
    }
  }
  return LaurentPoly::from_terms(f.arity(), std::move(terms));
}

template <Ring R, Ring S>
BasicPoly<S> substitute(const BasicPoly<R>& p, std::span<const BasicPoly<S>> images) {
  if (images.size() != p.arity()) {
    throw UsageError("substitute: expected " + std::to_string(p.arity()) + " images, got " +
                     std::to_string(images.size()));
  }
  const std::size_t target = images.empty() ? 0 : images[0].arity();
  for (const auto& img : images) require_same_arity(img.arity(), target, "substitute");
  if (p.is_zero()) return BasicPoly<S>(target);

  const std::size_t n = p.arity();
  std::vector<Exponent> max_pos(n, 0), max_neg(n, 0);
  for (const Term& t : p.terms()) {
    for (std::size_t v = 0; v < n; ++v) {
      max_pos[v] = std::max(max_pos[v], t.exponents[v]);
      max_neg[v] = std::max(max_neg[v], static_cast<Exponent>(-t.exponents[v]));
    }
  }
  std::vector<std::vector<BasicPoly<S>>> pos(n), neg(n);
  const BasicPoly<S> one = BasicPoly<S>::constant(target, GaussRat(1));
  for (std::size_t v = 0; v < n; ++v) {
    pos[v].push_back(one);
    for (Exponent k = 1; k <= max_pos[v]; ++k) pos[v].push_back(pos[v].back() * images[v]);
    if (max_neg[v] > 0) {
      const BasicPoly<S>& img = images[v];
      if (img.size() != 1) {
        throw UsageError("substitute: negative power of a non-monomial image");
      }
      const Term& t = img.terms()[0];
      std::vector<Term> inv_terms;
      Exponents e(t.exponents.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = -t.exponents[k];
      inv_terms.push_back(Term{std::move(e), GaussRat(1) / t.coeff});
      const BasicPoly<S> inv = BasicPoly<S>::from_terms(target, std::move(inv_terms));
      neg[v].push_back(one);
      for (Exponent k = 1; k <= max_neg[v]; ++k) neg[v].push_back(neg[v].back() * inv);
    }
  }

  std::vector<Term> collected;
  for (const Term& t : p.terms()) {
    BasicPoly<S> prod = BasicPoly<S>::constant(target, t.coeff);
    for (std::size_t v = 0; v < n && !prod.is_zero(); ++v) {
      const Exponent e = t.exponents[v];
      if (e > 0) prod = prod * pos[v][static_cast<std::size_t>(e)];
      if (e < 0) prod = prod * neg[v][static_cast<std::size_t>(-e)];
    }
    collected.insert(collected.end(), prod.terms().begin(), prod.terms().end());
  }
  return BasicPoly<S>::from_terms(target, std::move(collected));
}

template MPoly substitute(const MPoly&, std::span<const MPoly>);
template LaurentPoly substitute(const MPoly&, std::span<const LaurentPoly>);
template LaurentPoly substitute(const LaurentPoly&, std::span<const LaurentPoly>);
template MPoly substitute(const LaurentPoly&, std::span<const MPoly>);

template <Ring R>
BasicPoly<R> embed(const BasicPoly<R>& p, std::size_t new_arity,
                   std::span<const std::size_t> positions) {
  if (positions.size() != p.arity()) throw UsageError("embed: positions length mismatch");
  std::vector<bool> used(new_arity, false);
  for (std::size_t pos : positions) {
    if (pos >= new_arity || used[pos]) throw UsageError("embed: invalid target position");
    used[pos] = true;
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) {
    Exponents e(new_arity, 0);
    for (std::size_t v = 0; v < positions.size(); ++v) e[positions[v]] = t.exponents[v];
    terms.push_back(Term{std::move(e), t.coeff});
  }
  return BasicPoly<R>::from_terms(new_arity, std::move(terms));
}

template MPoly embed(const MPoly&, std::size_t, std::span<const std::size_t>);
template LaurentPoly embed(const LaurentPoly&, std::size_t, std::span<const std::size_t>);

MPoly shift(const MPoly& p, std::size_t first, std::span<const GaussRat> offsets) {
  if (first + offsets.size() > p.arity()) {
    throw UsageError("shift: block of " + std::to_string(offsets.size()) +
                     " variables starting at " + std::to_string(first) +
                     " does not fit arity " + std::to_string(p.arity()));
  }
  std::vector<MPoly> images;
  images.reserve(p.arity());
  for (std::size_t v = 0; v < p.arity(); ++v) {
    MPoly img = MPoly::variable(p.arity(), v);
    if (v >= first && v < first + offsets.size()) {
      img += MPoly::constant(p.arity(), offsets[v - first]);
    }
    images.push_back(std::move(img));
  }
  return substitute<Ring::polynomial, Ring::polynomial>(p, images);
}

MPoly shift(const MPoly& p, std::span<const GaussRat> offsets) {
  if (offsets.size() > p.arity()) {
    throw UsageError("shift: " + std::to_string(offsets.size()) +
                     " offsets for a polynomial of arity " + std::to_string(p.arity()));
  }
  return shift(p, p.arity() - offsets.size(), offsets);
}

template <Ring R>
GaussRat evaluate(const BasicPoly<R>& p, std::span<const GaussRat> point) {
  if (point.size() != p.arity()) {
    throw UsageError("evaluate: point of dimension " + std::to_string(point.size()) +
                     " for arity " + std::to_string(p.arity()));
  }
  GaussRat sum;
  for (const Term& t : p.terms()) {
    GaussRat prod = t.coeff;
    for (std::size_t v = 0; v < point.size(); ++v) {
      const Exponent e = t.exponents[v];
      if (e == 0) continue;
      if (e < 0 && point[v].is_zero()) {
        throw UsageError("evaluate: negative power of zero");
      }
      prod *= point[v].pow(e);
    }
    sum += prod;
  }
  return sum;
}

template GaussRat evaluate(const MPoly&, std::span<const GaussRat>);
template GaussRat evaluate(const LaurentPoly&, std::span<const GaussRat>);

template <class T>
SquareMatrix<T>::SquareMatrix(std::size_t n, std::vector<T> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw UsageError("matrix: expected " + std::to_string(n * n) + " entries, got " +
                     std::to_string(entries_.size()));
  }
}

template class SquareMatrix<GaussRat>;
template class SquareMatrix<LaurentPoly>;

MPoly substitute_linear(const MPoly& p, const SquareMatrix<GaussRat>& m) {
  const std::size_t n = p.arity();
  if (m.dimension() != n) {
    throw UsageError("substitute_linear: " + std::to_string(m.dimension()) + "x" +
                     std::to_string(m.dimension()) + " matrix for arity " + std::to_string(n));
  }
  std::vector<MPoly> images;
  images.reserve(n);
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<Term> terms;
    for (std::size_t col = 0; col < n; ++col) {
      Exponents e(n, 0);
      e[col] = 1;
      terms.push_back(Term{std::move(e), m(row, col)});
    }
    images.push_back(MPoly::from_terms(n, std::move(terms)));
  }
  return substitute<Ring::polynomial, Ring::polynomial>(p, images);
}

LaurentPoly substitute_linear(const MPoly& p, const SquareMatrix<LaurentPoly>& m) {
  const std::size_t n = p.arity();
  if (m.dimension() != n) {
    throw UsageError("substitute_linear: " + std::to_string(m.dimension()) + "x" +
                     std::to_string(m.dimension()) + " matrix for arity " + std::to_string(n));
  }
  const std::size_t target = n + 1;
  const std::size_t t_position[] = {0};
  std::vector<LaurentPoly> images;
  images.reserve(n);
  for (std::size_t row = 0; row < n; ++row) {
    LaurentPoly img(target);
    for (std::size_t col = 0; col < n; ++col) {
      const LaurentPoly& entry = m(row, col);
      if (entry.arity() != 1) {
        throw UsageError("substitute_linear: matrix entries must be Laurent polynomials in t");
      }
      img += embed(entry, target, t_position) * LaurentPoly::variable(target, col + 1);
    }
    images.push_back(std::move(img));
  }
  return substitute<Ring::polynomial, Ring::laurent>(p, images);
}

}  // namespace moment_forge
