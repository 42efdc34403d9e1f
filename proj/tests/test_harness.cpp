#include <gtest/gtest.h>

#include "moment_forge/errors.hpp"
#include "moment_forge/harness.hpp"
#include "moment_forge/io.hpp"
#include "moment_forge/selftest/generators.hpp"
#include "test_util.hpp"

using namespace moment_forge;
using moment_forge::testing::laurent;
using moment_forge::testing::poly;
using moment_forge::testing::q;
namespace st = moment_forge::selftest;

namespace {

std::vector<int> nonzero_indices(const std::vector<PiScalar>& values) {
  std::vector<int> out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!values[k].is_zero()) out.push_back(static_cast<int>(k + 1));
  }
  return out;
}

}  // namespace

TEST(VanishScan, Examples) {
  const VanishingProfile a = vanish_scan(poly("x^2 - 1", {"x"}), FunctionalKind::gaussian, 5);
  EXPECT_EQ(a.first_nonzero, 2);
  EXPECT_EQ(a.value_at(1), PiScalar());
  EXPECT_EQ(a.value_at(2), PiScalar(GaussRat(2)));
  EXPECT_FALSE(a.all_zero);

  const VanishingProfile b = vanish_scan(poly("(x + i*y)^2"), FunctionalKind::gaussian, 10);
  EXPECT_TRUE(b.all_zero);
  EXPECT_FALSE(b.first_nonzero.has_value());
  EXPECT_EQ(b.values.size(), 10u);

  for (auto kind : {FunctionalKind::gaussian, FunctionalKind::halfdisk, FunctionalKind::hermite_pairing}) {
    EXPECT_TRUE(vanish_scan(MPoly(2), kind, 4).all_zero);
  }
  EXPECT_TRUE(vanish_scan(LaurentPoly(1), FunctionalKind::torus_ct, 4).all_zero);
  EXPECT_THROW(vanish_scan(poly("x"), FunctionalKind::gaussian, 0), UsageError);
}

TEST(VanishScan, IncrementalMatchesDirectPowering) {
  st::Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    st::PolyShape shape;
    shape.arity = static_cast<std::size_t>(rng.uniform(1, 3));
    shape.max_degree = 3;
    shape.max_terms = 4;
    const MPoly p = st::random_poly(rng, shape);
    const VanishingProfile profile = vanish_scan(p, FunctionalKind::gaussian, 8);
    for (int m = 1; m <= 8; ++m) {
      ASSERT_EQ(profile.value_at(m), PiScalar(gaussian_expectation(p.pow(static_cast<unsigned>(m)))));
    }
  }
}

TEST(VanishScan, IncompatibleFunctionalIsUsageError) {
  EXPECT_THROW(vanish_scan(poly("x", {"x"}), FunctionalKind::halfdisk, 3), UsageError);
  EXPECT_THROW(vanish_scan(poly("x", {"x"}), FunctionalKind::hermite_pairing, 3), UsageError);
  EXPECT_THROW(vanish_scan(laurent("z^-1"), FunctionalKind::gaussian, 3), UsageError);
  EXPECT_NO_THROW(vanish_scan(poly("z^2", {"z"}), FunctionalKind::torus_ct, 3));
}

TEST(MzProbe, GaussianCompanionVanishesAfterFirstStep) {
  const MZProbeReport r = mz_probe(poly("(x + i*y)^2"), poly("(x - i*y)^2"), FunctionalKind::gaussian, 10);
  EXPECT_EQ(nonzero_indices(r.companion), std::vector<int>{1});
  EXPECT_EQ(r.companion_at(1), PiScalar(GaussRat(8)));
  EXPECT_TRUE(r.eventually_zero_up_to_bound);
  EXPECT_EQ(r.last_nonzero, 1);
  EXPECT_FALSE(r.counterexample_candidate());
}

TEST(MzProbe, HalfDiskCompanionNeverVanishes) {
  const MZProbeReport r = mz_probe(poly("(x + i*y)^2"), poly("x + i*y"), FunctionalKind::halfdisk, 10);
  EXPECT_TRUE(r.profile.all_zero);
  for (int m = 1; m <= 10; ++m) {
    EXPECT_EQ(r.companion_at(m), PiScalar(GaussRat(mpq_class(0), mpq_class(2, (2 * m + 3) * (2 * m + 1)))));
  }
  EXPECT_FALSE(r.eventually_zero_up_to_bound);
  EXPECT_TRUE(r.counterexample_candidate());
}

TEST(MzProbe, TorusCompanionIsolatedTerm) {
  const MZProbeReport r = mz_probe(laurent("z"), laurent("z^-3"), FunctionalKind::torus_ct, 10);
  EXPECT_EQ(nonzero_indices(r.companion), std::vector<int>{3});
  EXPECT_TRUE(r.eventually_zero_up_to_bound);
}

TEST(MzProbe, EventuallyZeroNeedsZeroAtBound) {
  // Companion nonzero exactly at the last m of the window.
  const MZProbeReport r = mz_probe(laurent("z"), laurent("z^-4"), FunctionalKind::torus_ct, 4);
  EXPECT_FALSE(r.eventually_zero_up_to_bound);
  EXPECT_TRUE(r.counterexample_candidate());
  EXPECT_THROW(mz_probe(poly("x"), poly("x", {"x"}), FunctionalKind::gaussian, 3), UsageError);
}

TEST(Certificate, Examples) {
  const CertResult a = frobenius_certificate(poly("1 - x^2", {"x"}), 5);
  EXPECT_EQ(a.exact_value, GaussRat(-544));
  EXPECT_EQ(a.residue, 1u);
  EXPECT_EQ(a.expected, 1u);
  EXPECT_TRUE(a.valid);
  EXPECT_EQ(a.status, CertStatus::certified);

  const CertResult b = frobenius_certificate(poly("x", {"x"}), 3);
  EXPECT_EQ(b.status, CertStatus::inconclusive);
  EXPECT_TRUE(b.valid);

  const CertResult c = frobenius_certificate(poly("1 - x^2 - y^2"), 3);
  EXPECT_EQ(c.exact_value, GaussRat(-29));
  EXPECT_EQ(c.residue, 1u);
  EXPECT_EQ(c.status, CertStatus::certified);
}

TEST(Certificate, Preconditions) {
  EXPECT_THROW(frobenius_certificate(poly("1/2 + x"), 3), UsageError);
  EXPECT_THROW(frobenius_certificate(poly("i + x"), 3), UsageError);
  EXPECT_THROW(frobenius_certificate(poly("1 + x"), 2), UsageError);
  EXPECT_THROW(frobenius_certificate(poly("1 + x"), 9), UsageError);
  EXPECT_THROW(frobenius_certificate(poly("1 + x"), 1), UsageError);
}

TEST(Certificate, NegativeConstantTermResidues) {
  const CertResult r = frobenius_certificate(poly("-4 + x^2*y"), 7);
  EXPECT_EQ(r.expected, 3u);
  EXPECT_TRUE(r.valid);
}

TEST(Reduction, Examples) {
  const DoubleHomogReduction a = double_homog_reduce(poly("(x + i*y)^2"));
  EXPECT_EQ(a.degrees, std::vector<int>{2});
  EXPECT_EQ(a.angular, laurent("z^2"));

  EXPECT_EQ(double_homog_reduce(poly("x^2 + y^2")).angular, laurent("1"));
  // cos t sin t = (z^2 - z^-2)/(4i)
  EXPECT_EQ(double_homog_reduce(poly("x*y")).angular, laurent("-1/4*i*z^2 + 1/4*i*z^-2"));
  EXPECT_EQ(a.radial_constant(1), mpz_class(2));
  EXPECT_EQ(a.radial_constant(3), mpz_class(48));
}

TEST(Reduction, RadialConstantNeedsEvenDegrees) {
  const DoubleHomogReduction r = double_homog_reduce(poly("x^3"));
  EXPECT_FALSE(r.radial_constant(1).has_value());
  EXPECT_EQ(r.radial_constant(2), mpz_class(48));
}

TEST(Reduction, Errors) {
  try {
    double_homog_reduce(poly("x^2 + y"), default_pairing(2), {"x", "y"});
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("(x, y)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(double_homog_reduce(poly("x", {"x"})), UsageError);
  const std::vector<VariablePair> overlapping = {{0, 1}, {0, 1}};
  EXPECT_THROW(double_homog_reduce(poly("x*y*a*b", {"x", "y", "a", "b"}), overlapping), UsageError);
}

TEST(Reduction, CustomPairing) {
  const std::vector<std::string> vars = {"x1", "y1", "x2", "y2"};
  const MPoly p = poly("(x1 + i*y1)*(x2^2 + y2^2)", vars);
  const DoubleHomogReduction r = double_homog_reduce(p, {{0, 1}, {2, 3}}, vars);
  EXPECT_EQ(r.degrees, (std::vector<int>{1, 2}));
  EXPECT_EQ(r.angular, laurent("z1", {"z1", "z2"}));
}

// Rebuilds P from (d, F_L) using z^j r^(d-|j|) = (x + sgn(j) i y)^|j| (x^2 + y^2)^((d-|j|)/2).
TEST(Reduction, SoundnessByReconstruction) {
  st::Rng rng(32);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    std::vector<int> degrees(n);
    for (int& d : degrees) d = static_cast<int>(rng.uniform(0, 5));
    const MPoly p = st::random_doubly_homogeneous(rng, degrees, 5);
    const DoubleHomogReduction r = double_homog_reduce(p);
    ASSERT_EQ(r.degrees, degrees);
    const std::size_t arity = 2 * n;
    MPoly rebuilt(arity);
    for (const Term& t : r.angular.terms()) {
      MPoly piece = MPoly::constant(arity, t.coeff);
      for (std::size_t j = 0; j < n; ++j) {
        const int e = t.exponents[j];
        const int rest = degrees[j] - std::abs(e);
        ASSERT_GE(rest, 0);
        ASSERT_EQ(rest % 2, 0);
        const MPoly x = MPoly::variable(arity, j), y = MPoly::variable(arity, n + j);
        const MPoly linear = x + y.scaled(e >= 0 ? GaussRat::i() : -GaussRat::i());
        piece = piece * linear.pow(static_cast<unsigned>(std::abs(e))) *
                (x * x + y * y).pow(static_cast<unsigned>(rest / 2));
      }
      rebuilt += piece;
    }
    ASSERT_EQ(rebuilt, p) << "instance " << k;
  }
}

TEST(Crosscheck, Examples) {
  const CrosscheckReport xy = gaussian_torus_crosscheck(poly("x*y"), default_pairing(2), 4);
  EXPECT_TRUE(xy.all_hold);
  EXPECT_EQ(xy.rows[1].gaussian, GaussRat(1));
  EXPECT_EQ(xy.rows[1].torus, q(1, 8));
  EXPECT_EQ(xy.rows[1].constant, mpz_class(8));

  const CrosscheckReport r2 = gaussian_torus_crosscheck(poly("x^2 + y^2"), default_pairing(2), 3);
  EXPECT_EQ(r2.rows[2].gaussian, GaussRat(48));
  EXPECT_EQ(r2.rows[2].torus, GaussRat(1));
  EXPECT_EQ(r2.rows[2].ratio_holds, true);

  const CrosscheckReport z2 = gaussian_torus_crosscheck(poly("(x + i*y)^2"), default_pairing(2), 5);
  for (const CrosscheckRow& row : z2.rows) {
    EXPECT_TRUE(row.gaussian.is_zero());
    EXPECT_TRUE(row.torus.is_zero());
  }
}

TEST(Crosscheck, OddDegreeOnlyChecksVanishing) {
  const CrosscheckReport r = gaussian_torus_crosscheck(poly("x^3 + x*y^2"), default_pairing(2), 4);
  EXPECT_TRUE(r.all_hold);
  EXPECT_FALSE(r.rows[0].ratio_holds.has_value());
  EXPECT_FALSE(r.rows[0].constant.has_value());
  EXPECT_TRUE(r.rows[1].ratio_holds.value_or(false));
}

TEST(Crosscheck, RandomTwoPairInputs) {
  st::Rng rng(33);
  for (int k = 0; k < 15; ++k) {
    std::vector<int> degrees = {static_cast<int>(rng.uniform(1, 4)), static_cast<int>(rng.uniform(0, 4))};
    const MPoly p = st::random_doubly_homogeneous(rng, degrees, 3);
    ASSERT_TRUE(gaussian_torus_crosscheck(p, default_pairing(4), 6).all_hold) << format_poly(p, {"x1", "x2", "y1", "y2"});
  }
}

TEST(OnePS, RotationExamples) {
  const OnePS rot = OnePS::rotation();
  const OnePSReport a = one_ps_check(poly("(x + i*y)^2"), rot);
  EXPECT_EQ(a.min_t_exponent, -2);
  EXPECT_FALSE(a.member);
  EXPECT_EQ(a.min_t_exponent_inverse, 2);
  EXPECT_TRUE(a.member_inverse);

  const OnePSReport b = one_ps_check(poly("x^2 + y^2"), rot);
  EXPECT_EQ(b.min_t_exponent, 0);
  EXPECT_EQ(b.min_t_exponent_inverse, 0);
  EXPECT_FALSE(b.member);
  EXPECT_FALSE(b.member_inverse);
}

TEST(OnePS, IdentityAndZero) {
  const OnePS id = OnePS::identity(3);
  const OnePSReport r = one_ps_check(poly("a*b + c^3", {"a", "b", "c"}), id);
  EXPECT_EQ(r.min_t_exponent, 0);
  const OnePSReport zero = one_ps_check(MPoly(3), id);
  EXPECT_FALSE(zero.min_t_exponent.has_value());
  EXPECT_TRUE(zero.member);
  EXPECT_THROW(one_ps_check(poly("x"), id), UsageError);
}

TEST(OnePS, NonOrthogonalMatrixNamesEntry) {
  std::vector<LaurentPoly> entries = {laurent("t", {"t"}), laurent("0", {"t"}), laurent("0", {"t"}),
                                      laurent("t", {"t"})};
  try {
    OnePS bad(SquareMatrix<LaurentPoly>(2, entries));
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("[1][1]"), std::string::npos) << e.what();
  }
  std::vector<LaurentPoly> diag = {laurent("t", {"t"}), laurent("0", {"t"}), laurent("0", {"t"}),
                                   laurent("t^-1", {"t"})};
  EXPECT_THROW(OnePS(SquareMatrix<LaurentPoly>(2, diag)), UsageError);
}

TEST(OnePS, MembershipInvariantUnderScaling) {
  st::Rng rng(34);
  const OnePS rot = OnePS::rotation();
  for (int k = 0; k < 30; ++k) {
    st::PolyShape shape;
    shape.arity = 2;
    shape.max_degree = 4;
    const MPoly p = st::random_poly(rng, shape);
    const GaussRat c = st::random_scalar(rng, shape);
    if (c.is_zero()) continue;
    const OnePSReport a = one_ps_check(p, rot), b = one_ps_check(p.scaled(c), rot);
    ASSERT_EQ(a.member, b.member);
    ASSERT_EQ(a.min_t_exponent, b.min_t_exponent);
    ASSERT_EQ(a.member_inverse, b.member_inverse);
  }
}
