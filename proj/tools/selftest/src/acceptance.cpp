#include "moment_forge/selftest/acceptance.hpp"

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <sstream>

#include "moment_forge/combinatorics.hpp"
#include "moment_forge/errors.hpp"
#include "moment_forge/functionals.hpp"
#include "moment_forge/harness.hpp"
#include "moment_forge/io.hpp"
#include "moment_forge/parallel.hpp"
#include "moment_forge/selftest/generators.hpp"
#include "moment_forge/selftest/oracles.hpp"

namespace moment_forge::selftest {

namespace {

using Clock = std::chrono::steady_clock;

// Collects the first failure; later ones only bump the count.
class Verdict {
 public:
  void fail(const std::string& why) {
    if (failures_++ == 0) first_ = why;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    return std::to_string(failures_) + " failure(s); first: " + first_;
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

CriterionResult titled(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string vec_str(std::span<const Exponent> e) {
  std::string s = "(";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
  return s + ")";
}

// Calls fn(exponents) for every exponent vector of the given length with
// total degree <= max_total.
template <class Fn>
void for_each_bounded(std::size_t length, int max_total, Fn&& fn) {
  Exponents e(length, 0);
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v == length) {
      fn(static_cast<const Exponents&>(e));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(rec, 0, max_total);
}

MPoly x_plus_iy(int sign) {
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  return x + y.scaled(sign > 0 ? GaussRat::i() : -GaussRat::i());
}

CriterionResult halfdisk_reproduction(const SuiteOptions&) {
  CriterionResult r = titled(1, "half-disk: moments of (x+iy)^2 vanish, (x+iy)^(2m+1) gives 2i/((2m+3)(2m+1)), m=1..50, < 10 s");
  const auto start = Clock::now();
  const MPoly p = x_plus_iy(+1).pow(2);
  const MZProbeReport report = mz_probe(p, x_plus_iy(+1), FunctionalKind::halfdisk, 50);
  Verdict v;
  for (int m = 1; m <= 50; ++m) {
    if (!report.profile.value_at(m).is_zero()) {
      v.fail("halfdisk((x+iy)^" + std::to_string(2 * m) + ") = " +
             report.profile.value_at(m).to_string());
    }
    const GaussRat expected(mpq_class(0), mpq_class(2, (2 * m + 3) * (2 * m + 1)));
    if (report.companion_at(m) != PiScalar(expected)) {
      v.fail("m=" + std::to_string(m) + ": got " + report.companion_at(m).to_string() +
             ", expected " + expected.to_string());
    }
  }
  r.seconds = seconds_since(start);
  if (r.seconds >= 10.0) v.fail("runtime limit exceeded");
  r.passed = v.ok();
  r.detail = v.summary("100 exact values; m=1 -> " + report.companion_at(1).to_string() +
                       ", m=50 -> " + report.companion_at(50).to_string());
  return r;
}

CriterionResult pairing_table(const SuiteOptions&) {
  CriterionResult r = titled(2, "hermite pairing: w^a z^b -> a! if a=b else 0, |a|+|b|<=8, n<=3, both routes");
  const auto start = Clock::now();
  Verdict v;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_bounded(2 * n, 8, [&](const Exponents& e) {
      const MPoly monomial = MPoly::monomial(e);
      const std::span<const Exponent> alpha(e.data(), n), beta(e.data() + n, n);
      GaussRat expected;
      if (std::equal(alpha.begin(), alpha.end(), beta.begin())) {
        mpz_class f = 1;
        for (Exponent a : alpha) f *= oracle::plain_factorial(a);
        expected = GaussRat(f);
      }
      const GaussRat direct = hermite_pairing(monomial);
      const GaussRat via_en = hermite_pairing_via_en(monomial);
      if (direct != expected || via_en != expected) {
        v.fail("w^" + vec_str(alpha) + " z^" + vec_str(beta) + ": direct " + direct.to_string() +
               ", via E_n " + via_en.to_string() + ", expected " + expected.to_string());
      }
      ++checked;
    });
  }
  r.seconds = seconds_since(start);
  r.passed = v.ok();
  r.detail = v.summary(std::to_string(checked) + " monomials agree on both routes");
  return r;
}

CriterionResult wz_identity(const SuiteOptions&) {
  CriterionResult r = titled(3, "W/Z realization: E(W^a Z^b) = 2^((|a|+|b|)/2) F_n(w^a z^b), |a|+|b|<=8, n<=2");
  const auto start = Clock::now();
  Verdict v;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for_each_bounded(2 * n, 8, [&](const Exponents& e) {
      const std::span<const Exponent> alpha(e.data(), n), beta(e.data() + n, n);
      const GaussRat lhs = wz_expectation(alpha, beta);
      const long total = total_degree(e);
      GaussRat rhs;
      if (total % 2 == 0) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(total / 2));
        rhs = GaussRat(scale) * hermite_pairing(MPoly::monomial(e));
      } else if (!hermite_pairing(MPoly::monomial(e)).is_zero()) {
        v.fail("odd total degree with nonzero pairing at " + vec_str(e));
      }
      if (lhs != rhs) {
        v.fail("a=" + vec_str(alpha) + " b=" + vec_str(beta) + ": " + lhs.to_string() + " vs " +
               rhs.to_string());
      }
      ++checked;
    });
  }
  r.seconds = seconds_since(start);
  r.passed = v.ok();
  r.detail = v.summary(std::to_string(checked) + " exponent pairs agree");
  return r;
}

CriterionResult shift_identity(const SuiteOptions& options) {
  CriterionResult r = titled(4, "shift identity: E_n(P)(a) = F_n(P(w, z+a)), 100 random (P, a), n<=2, deg<=4");
  const auto start = Clock::now();
  Rng rng(options.seed * 1000003ULL + 4);
  Verdict v;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    PolyShape shape;
    shape.arity = 2 * n;
    shape.max_degree = 4;
    shape.max_terms = 8;
    const MPoly p = random_poly(rng, shape);
    std::vector<GaussRat> a;
    for (std::size_t j = 0; j < n; ++j) a.push_back(random_scalar(rng, shape));
    const GaussRat lhs = evaluate(apply_en(p), a);
    const GaussRat rhs = hermite_pairing(shift(p, a));
    if (lhs != rhs) v.fail("instance " + std::to_string(k) + ": " + lhs.to_string() + " vs " + rhs.to_string());
  }
  r.seconds = seconds_since(start);
  r.passed = v.ok();
  r.detail = v.summary("100 instances agree");
  return r;
}

CriterionResult frobenius_congruence(const SuiteOptions& options) {
  CriterionResult r = titled(5, "Frobenius congruence: E(F^p) = F(0) mod p, 200 integer F x p in {3,5,7,11}, < 60 s");
  const auto start = Clock::now();
  Rng rng(options.seed * 1000003ULL + 5);
  std::vector<MPoly> polys;
  for (int k = 0; k < 200; ++k) {
    PolyShape shape;
    shape.arity = static_cast<std::size_t>(rng.uniform(1, 3));
    shape.max_degree = 4;
    shape.max_terms = 8;
    shape.complex = false;
    shape.fractions = false;
    polys.push_back(random_poly(rng, shape));
  }
  const unsigned long primes[] = {3, 5, 7, 11};
  struct Tally {
    int certified = 0, inconclusive = 0;
    std::string failure;
  };
  const std::vector<Tally> tallies = parallel_map(polys.size(), [&](std::size_t k) {
    Tally t;
    for (unsigned long p : primes) {
      const CertResult c = frobenius_certificate(polys[k], p);
      if (!c.valid && t.failure.empty()) {
        t.failure = "F #" + std::to_string(k) + ", p=" + std::to_string(p) + ": residue " +
                    std::to_string(c.residue) + " != " + std::to_string(c.expected);
      }
      t.certified += c.status == CertStatus::certified;
      t.inconclusive += c.status == CertStatus::inconclusive;
    }
    return t;
  });
  Verdict v;
  int certified = 0, inconclusive = 0;
  for (const Tally& t : tallies) {
    if (!t.failure.empty()) v.fail(t.failure);
    certified += t.certified;
    inconclusive += t.inconclusive;
  }
  r.seconds = seconds_since(start);
  if (r.seconds >= 60.0) v.fail("runtime limit exceeded");
  r.passed = v.ok();
  r.detail = v.summary("800 congruences hold (" + std::to_string(certified) + " certified nonvanishing, " +
                       std::to_string(inconclusive) + " inconclusive)");
  return r;
}

CriterionResult orthogonal_invariance(const SuiteOptions& options) {
  CriterionResult r = titled(6, "orthogonal invariance: E(P(Mx)) = E(P(x)), M = ((3/5,4/5),(-4/5,3/5)), 100 P, deg<=6");
  const auto start = Clock::now();
  const SquareMatrix<GaussRat> m(2, {GaussRat(mpq_class(3, 5)), GaussRat(mpq_class(4, 5)),
                                     GaussRat(mpq_class(-4, 5)), GaussRat(mpq_class(3, 5))});
  Rng rng(options.seed * 1000003ULL + 6);
  Verdict v;
  for (int k = 0; k < 100; ++k) {
    PolyShape shape;
    shape.arity = 2;
    shape.max_degree = 6;
    shape.max_terms = 8;
    const MPoly p = random_poly(rng, shape);
    const GaussRat before = gaussian_expectation(p);
    const GaussRat after = gaussian_expectation(substitute_linear(p, m));
    if (before != after) v.fail("instance " + std::to_string(k) + ": " + before.to_string() + " vs " + after.to_string());
  }
  r.seconds = seconds_since(start);
  r.passed = v.ok();
  r.detail = v.summary("100 instances invariant");
  return r;
}

CriterionResult torus_crosscheck(const SuiteOptions& options) {
  CriterionResult r = titled(7, "torus reduction: E(P^m) = A_m CT(F_L^m) (exact when all m*d_k even, else vanishing equivalence), 50 P, m=1..8");
  const auto start = Clock::now();
  Rng rng(options.seed * 1000003ULL + 7);
  struct Instance {
    MPoly p;
    std::vector<int> degrees;
  };
  std::vector<Instance> instances;
  for (int k = 0; k < 50; ++k) {
    const std::size_t pairs = k < 25 ? 1 : 2;
    std::vector<int> degrees(pairs);
    do {
      for (int& d : degrees) d = static_cast<int>(rng.uniform(0, 6));
    } while (std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 0; }));
    instances.push_back({random_doubly_homogeneous(rng, degrees, 4), degrees});
  }
  struct Outcome {
    std::string failure;
    int ratio_rows = 0, equivalence_rows = 0;
  };
  const std::vector<Outcome> outcomes = parallel_map(instances.size(), [&](std::size_t k) {
    Outcome o;
    const MPoly& p = instances[k].p;
    const CrosscheckReport report = gaussian_torus_crosscheck(p, default_pairing(p.arity()), 8);
    if (report.reduction.degrees != instances[k].degrees) o.failure = "degree mismatch";
    for (const CrosscheckRow& row : report.rows) {
      if (row.ratio_holds) ++o.ratio_rows;
      ++o.equivalence_rows;
      if (!row.holds() && o.failure.empty()) {
        o.failure = "instance " + std::to_string(k) + ", m=" + std::to_string(row.m) +
                    ": E = " + row.gaussian.to_string() + ", CT = " + row.torus.to_string();
      }
    }
    return o;
  });
  Verdict v;
  int ratio_rows = 0, equivalence_rows = 0;
  for (const Outcome& o : outcomes) {
    if (!o.failure.empty()) v.fail(o.failure);
    ratio_rows += o.ratio_rows;
    equivalence_rows += o.equivalence_rows;
  }
  r.seconds = seconds_since(start);
  r.passed = v.ok();
  r.detail = v.summary(std::to_string(ratio_rows) + " exact ratios, " +
                       std::to_string(equivalence_rows) + " vanishing equivalences");
  return r;
}

CriterionResult univariate_evidence(const SuiteOptions& options) {
  CriterionResult r = titled(8, "univariate moments: 100 nonzero P, deg<=6, some E(P^m) != 0 with m <= 32");
  const auto start = Clock::now();
  Rng rng(options.seed * 1000003ULL + 8);
  std::vector<MPoly> polys;
  for (int k = 0; k < 100; ++k) {
    PolyShape shape;
    shape.arity = 1;
    shape.max_degree = 6;
    shape.max_terms = 7;
    polys.push_back(random_poly(rng, shape));
  }
  const std::vector<int> first = parallel_map(polys.size(), [&](std::size_t k) {
    const VanishingProfile profile = vanish_scan(polys[k], FunctionalKind::gaussian, 32);
    return profile.first_nonzero.value_or(0);
  });
  Verdict v;
  int worst = 0;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (first[k] == 0) {
      v.fail("counterexample candidate: P = " + format_poly(polys[k], {"x"}) +
             " has E(P^m) = 0 for m = 1..32");
    }
    worst = std::max(worst, first[k]);
  }
  r.seconds = seconds_since(start);
  r.passed = v.ok();
  r.detail = v.summary("no zero candidates; largest first_nonzero = " + std::to_string(worst));
  return r;
}

CriterionResult mz_profile(const SuiteOptions&) {
  CriterionResult r = titled(9, "MZ profile: P=(x+iy)^2, Q=(x-iy)^(2k), k=1..5, M=12, companion nonzero only at m=k with 2^(2k)(2k)!");
  const auto start = Clock::now();
  const MPoly p = x_plus_iy(+1).pow(2);
  const oracle::TermMap p_map = oracle::to_map(p);
  Verdict v;
  for (unsigned k = 1; k <= 5; ++k) {
    const MPoly q = x_plus_iy(-1).pow(2 * k);
    const MZProbeReport report = mz_probe(p, q, FunctionalKind::gaussian, 12);
    const oracle::TermMap q_map = oracle::naive_pow(oracle::to_map(x_plus_iy(-1)), 2, 2 * k);
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k);
    const GaussRat closed_form(mpz_class(two_pow * oracle::plain_factorial(2 * k)));
    for (unsigned m = 1; m <= 12; ++m) {
      const GaussRat brute =
          oracle::gaussian(oracle::multiply(oracle::naive_pow(p_map, 2, m), q_map));
      const GaussRat expected = m == k ? closed_form : GaussRat();
      const PiScalar& got = report.companion_at(static_cast<int>(m));
      if (brute != expected || got != PiScalar(expected)) {
        v.fail("k=" + std::to_string(k) + ", m=" + std::to_string(m) + ": harness " +
               got.to_string() + ", brute force " + brute.to_string() + ", closed form " +
               expected.to_string());
      }
    }
    if (!report.profile.all_zero) v.fail("E(P^m) should vanish for all m");
  }
  r.seconds = seconds_since(start);
  r.passed = v.ok();
  r.detail = v.summary("5 profiles match brute force (k=5 value " + GaussRat(mpz_class(mpz_class(1024) * oracle::plain_factorial(10))).to_string() + ")");
  return r;
}

long peak_rss_kib() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

CriterionResult performance(const SuiteOptions&) {
  CriterionResult r = titled(10, "performance: E((x^2+y^2+xy+1)^64) exact in < 5 s, < 1 GB");
  const MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  const MPoly p = x * x + y * y + x * y + MPoly::constant(2, GaussRat(1));
  const auto start = Clock::now();
  const GaussRat value = gaussian_expectation(p.pow(64));
  const double elapsed = seconds_since(start);
  const long rss = peak_rss_kib();
  r.seconds = elapsed;
  Verdict v;
  if (elapsed >= 5.0) v.fail("took " + std::to_string(elapsed) + " s");
  if (rss >= 1024L * 1024L) v.fail("peak RSS " + std::to_string(rss / 1024) + " MiB");
  const mpz_class expected = oracle::gaussian_quartic_power(64);
  if (value != GaussRat(expected)) v.fail("value disagrees with the multinomial oracle");
  r.passed = v.ok();
  r.detail = v.summary("value matches multinomial oracle (" +
                       std::to_string(expected.get_str().size()) + " digits)");
  return r;
}

CriterionResult parser_roundtrip(const SuiteOptions& options) {
  CriterionResult r = titled(11, "parser: 500 random round trips exact; fuzz inputs never crash");
  const auto start = Clock::now();
  Rng rng(options.seed * 1000003ULL + 11);
  Verdict v;
  const std::vector<std::string> names = {"x", "y", "z1", "w_2"};
  for (int k = 0; k < 500; ++k) {
    PolyShape shape;
    shape.arity = static_cast<std::size_t>(rng.uniform(1, 4));
    shape.max_degree = 6;
    shape.max_terms = 8;
    const std::vector<std::string> vars(names.begin(), names.begin() + static_cast<long>(shape.arity));
    const MPoly p = random_poly(rng, shape);
    if (k % 5 == 4) {
      // Laurent instance: shift every exponent down by a random offset.
      const long drop = rng.uniform(1, 3);
      std::vector<Term> terms(p.terms().begin(), p.terms().end());
      for (Term& t : terms) {
        for (Exponent& e : t.exponents) e -= static_cast<Exponent>(drop);
      }
      const LaurentPoly f = LaurentPoly::from_terms(p.arity(), std::move(terms));
      const std::string text = format_poly(f, vars);
      const LaurentPoly back = parse_laurent(text, vars);
      if (back != f || format_poly(back, vars) != text) v.fail("Laurent round trip failed for " + text);
      continue;
    }
    const std::string text = format_poly(p, vars);
    const MPoly back = parse_mpoly(text, vars);
    if (back != p || format_poly(back, vars) != text) v.fail("round trip failed for " + text);
  }

  static const std::string alphabet = "xyzi0123456789+-*/^() \n\t._";
  const std::vector<std::string> fuzz_vars = {"x", "y"};
  std::size_t accepted = 0, rejected = 0;
  for (std::size_t k = 0; k < options.fuzz_inputs; ++k) {
    std::string input;
    const long length = rng.uniform(0, 24);
    const bool raw = k % 2 == 0;
    for (long j = 0; j < length; ++j) {
      input += raw ? static_cast<char>(rng.uniform(0, 255))
                   : alphabet[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(alphabet.size()) - 1))];
    }
    const Ring ring = k % 3 == 0 ? Ring::laurent : Ring::polynomial;
    try {
      (void)parse_poly(PolySource{input, ring, fuzz_vars});
      ++accepted;
    } catch (const ParseError&) {
      ++rejected;
    } catch (const UsageError&) {
      ++rejected;
    } catch (const std::exception& e) {
      v.fail("fuzz input #" + std::to_string(k) + " raised " + e.what());
    }
  }
  r.seconds = seconds_since(start);
  r.passed = v.ok();
  r.detail = v.summary("500 round trips exact; " + std::to_string(options.fuzz_inputs) +
                       " fuzz inputs (" + std::to_string(accepted) + " parsed, " +
                       std::to_string(rejected) + " positioned errors)");
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(
    const SuiteOptions& options, const std::function<void(const CriterionResult&)>& on_result) {
  using Criterion = CriterionResult (*)(const SuiteOptions&);
  static const Criterion criteria[] = {
      halfdisk_reproduction, pairing_table,        wz_identity,  shift_identity,
      frobenius_congruence,  orthogonal_invariance, torus_crosscheck, univariate_evidence,
      mz_profile,            performance,           parser_roundtrip};
  std::vector<CriterionResult> results;
  for (std::size_t k = 0; k < std::size(criteria); ++k) {
    const int id = static_cast<int>(k + 1);
    if (!options.only.empty() && options.only.count(id) == 0) continue;
    CriterionResult result;
    try {
      result = criteria[k](options);
    } catch (const std::exception& e) {
      result.id = id;
      result.title = "criterion " + std::to_string(id);
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(result);
    results.push_back(std::move(result));
  }
  return results;
}

std::string format_result(const CriterionResult& result) {
  char id[8];
  std::snprintf(id, sizeof id, "C%02d", result.id);
  return std::string(result.passed ? "PASS" : "FAIL") + "  " + id + "  " + result.title + ": " +
         result.detail;
}

}  // namespace moment_forge::selftest
