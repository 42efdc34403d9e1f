#include "moment_forge/selftest/oracles.hpp"

namespace moment_forge::selftest::oracle {

TermMap to_map(const MPoly& p) {
  TermMap out;
  for (const Term& t : p.terms()) out[t.exponents] = t.coeff;
  return out;
}

MPoly from_map(std::size_t arity, const TermMap& terms) {
  std::vector<Term> list;
  for (const auto& [e, c] : terms) list.push_back(Term{e, c});
  return MPoly::from_terms(arity, std::move(list));
}

TermMap multiply(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      GaussRat& slot = out[e];
      slot += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

TermMap naive_pow(const TermMap& p, std::size_t arity, unsigned m) {
  TermMap acc;
  acc[Exponents(arity, 0)] = GaussRat(1);
  for (unsigned k = 0; k < m; ++k) acc = multiply(acc, p);
  return acc;
}

mpz_class odd_double_factorial(long k_minus_one) {
  mpz_class r = 1;
  for (long j = k_minus_one; j > 1; j -= 2) r *= j;
  return r;
}

mpz_class plain_factorial(long n) {
  mpz_class r = 1;
  for (long j = 2; j <= n; ++j) r *= j;
  return r;
}

GaussRat gaussian(const TermMap& p) {
  GaussRat sum;
  for (const auto& [e, c] : p) {
    mpz_class w = 1;
    bool even = true;
    for (Exponent x : e) {
      if (x % 2 != 0) {
        even = false;
        break;
      }
      w *= odd_double_factorial(x - 1);
    }
    if (even) sum += c * GaussRat(w);
  }
  return sum;
}

mpz_class gaussian_quartic_power(unsigned m) {
  const long n = static_cast<long>(m);
  std::vector<mpz_class> fact(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) fact[static_cast<std::size_t>(j)] = plain_factorial(j);
  std::vector<mpz_class> dfact(static_cast<std::size_t>(2 * n) + 2);  // dfact[k] = (k-1)!!
  for (long k = 0; k <= 2 * n + 1; ++k) dfact[static_cast<std::size_t>(k)] = odd_double_factorial(k - 1);
  auto f = [&](long j) -> const mpz_class& { return fact[static_cast<std::size_t>(j)]; };
  mpz_class sum = 0;
  for (long a = 0; a <= n; ++a) {
    for (long b = 0; a + b <= n; ++b) {
      for (long c = 0; a + b + c <= n; c += 2) {  // odd c leaves odd exponents
        const long d = n - a - b - c;
        const mpz_class multinomial = f(n) / (f(a) * f(b) * f(c) * f(d));
        sum += multinomial * dfact[static_cast<std::size_t>(2 * a + c)] *
               dfact[static_cast<std::size_t>(2 * b + c)];
      }
    }
  }
  return sum;
}

}  // namespace moment_forge::selftest::oracle
