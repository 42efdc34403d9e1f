#include <gtest/gtest.h>

#include <cmath>

#include "moment_forge/errors.hpp"
#include "moment_forge/functionals.hpp"
#include "moment_forge/selftest/generators.hpp"
#include "moment_forge/selftest/oracles.hpp"
#include "test_util.hpp"

using namespace moment_forge;
using moment_forge::testing::laurent;
using moment_forge::testing::poly;
using moment_forge::testing::q;
namespace st = moment_forge::selftest;

TEST(Gaussian, Monomials) {
  EXPECT_EQ(gaussian_expectation(poly("1")), GaussRat(1));
  EXPECT_EQ(gaussian_expectation(poly("x")), GaussRat());
  EXPECT_EQ(gaussian_expectation(poly("x^2")), GaussRat(1));
  EXPECT_EQ(gaussian_expectation(poly("x^4")), GaussRat(3));
  EXPECT_EQ(gaussian_expectation(poly("x^6*y^2")), GaussRat(15));
  EXPECT_EQ(gaussian_expectation(poly("x^3*y^3")), GaussRat());
  EXPECT_EQ(gaussian_expectation(MPoly(3)), GaussRat());
}

TEST(Gaussian, WorkedExamples) {
  EXPECT_EQ(gaussian_expectation(poly("(1 - x^2)^5", {"x"})), GaussRat(-544));
  EXPECT_EQ(gaussian_expectation(poly("(1 - x^2 - y^2)^3")), GaussRat(-29));
  EXPECT_EQ(gaussian_expectation(poly("(x^2 + y^2)^2")), GaussRat(8));
}

TEST(Gaussian, MatchesMonomialOracle) {
  st::Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    st::PolyShape shape;
    shape.arity = static_cast<std::size_t>(rng.uniform(1, 4));
    shape.max_degree = 10;
    shape.max_terms = 10;
    const MPoly p = st::random_poly(rng, shape);
    ASSERT_EQ(gaussian_expectation(p), st::oracle::gaussian(st::oracle::to_map(p)));
  }
}

TEST(Gaussian, QuarticPowerMatchesMultinomialOracle) {
  const MPoly p = poly("x^2 + y^2 + x*y + 1");
  for (unsigned m : {0u, 1u, 2u, 5u, 12u}) {
    EXPECT_EQ(gaussian_expectation(p.pow(m)), GaussRat(st::oracle::gaussian_quartic_power(m))) << m;
  }
}

TEST(HermitePairing, Monomials) {
  const std::vector<std::string> wz = {"w", "z"};
  EXPECT_EQ(hermite_pairing(poly("w^3*z^3", wz)), GaussRat(6));
  EXPECT_EQ(hermite_pairing(poly("w*z^2", wz)), GaussRat());
  EXPECT_EQ(hermite_pairing(poly("1", wz)), GaussRat(1));
  const std::vector<std::string> wz2 = {"w1", "w2", "z1", "z2"};
  EXPECT_EQ(hermite_pairing(poly("w1^2*w2*z1^2*z2", wz2)), GaussRat(2));
  EXPECT_EQ(hermite_pairing(poly("w1^2*z2^2", wz2)), GaussRat());
  EXPECT_THROW(hermite_pairing(poly("x", {"x"})), UsageError);
  EXPECT_THROW(apply_en(poly("x", {"x"})), UsageError);
}

TEST(HermitePairing, DifferentialOperatorImage) {
  const std::vector<std::string> wz = {"w", "z"};
  EXPECT_EQ(apply_en(poly("w^2*z^3", wz)), poly("6*z", {"z"}));
  EXPECT_EQ(apply_en(poly("w^4*z^3", wz)), MPoly(1));
  EXPECT_EQ(apply_en(poly("3*z^2 + w*z", wz)), poly("3*z^2 + 1", {"z"}));
}

TEST(HermitePairing, BothRoutesAgreeOnRandomInput) {
  st::Rng rng(22);
  for (int k = 0; k < 100; ++k) {
    st::PolyShape shape;
    shape.arity = 2 * static_cast<std::size_t>(rng.uniform(1, 3));
    shape.max_degree = 6;
    shape.max_terms = 10;
    const MPoly p = st::random_poly(rng, shape);
    ASSERT_EQ(hermite_pairing(p), hermite_pairing_via_en(p));
  }
}

TEST(WzExpectation, SmallCases) {
  const std::vector<Exponent> one = {1}, zero = {0}, two = {2};
  // E((x - iy)(x + iy)) = E(x^2 + y^2) = 2.
  EXPECT_EQ(wz_expectation(one, one), GaussRat(2));
  EXPECT_EQ(wz_expectation(two, two), GaussRat(8));
  EXPECT_EQ(wz_expectation(two, zero), GaussRat());
  EXPECT_EQ(wz_expectation(one, zero), GaussRat());
}

TEST(WzExpectation, MatchesGaussianOfExpandedProduct) {
  const MPoly w = poly("x - i*y"), z = poly("x + i*y");
  for (Exponent a = 0; a <= 4; ++a) {
    for (Exponent b = 0; b <= 4; ++b) {
      const std::vector<Exponent> alpha = {a}, beta = {b};
      const GaussRat expected = gaussian_expectation(w.pow(static_cast<unsigned long>(a)) * z.pow(static_cast<unsigned long>(b)));
      EXPECT_EQ(wz_expectation(alpha, beta), expected) << a << "," << b;
    }
  }
}

TEST(HalfDisk, ClosedForms) {
  const GaussRat zero;
  EXPECT_EQ(halfdisk_integral(poly("1")), PiScalar(zero, q(1, 2)));
  EXPECT_EQ(halfdisk_integral(poly("y")), PiScalar(q(2, 3)));
  EXPECT_EQ(halfdisk_integral(poly("x")), PiScalar());
  EXPECT_EQ(halfdisk_integral(poly("x^2")), PiScalar(zero, q(1, 8)));
  EXPECT_EQ(halfdisk_integral(poly("x^2 + y^2")), PiScalar(zero, q(1, 4)));
  EXPECT_EQ(halfdisk_integral(poly("x^2*y")), PiScalar(q(2, 15)));
  EXPECT_THROW(halfdisk_integral(poly("x", {"x"})), UsageError);
}

TEST(HalfDisk, OddPowersOfXPlusIY) {
  const MPoly z = poly("x + i*y");
  for (unsigned m = 0; m <= 8; ++m) {
    const GaussRat expected(mpq_class(0), mpq_class(2, (2 * m + 3) * (2 * m + 1)));
    EXPECT_EQ(halfdisk_integral(z.pow(2 * m + 1)), PiScalar(expected)) << m;
    if (m > 0) {
      EXPECT_TRUE(halfdisk_integral(z.pow(2 * m)).is_zero()) << m;
    }
  }
}

TEST(HalfDisk, AgreesWithPolarQuadrature) {
  // Midpoint rule in polar coordinates as an independent numeric check.
  auto numeric = [](int a, int b) {
    const int nr = 400, nt = 800;
    const double pi = std::acos(-1.0);
    double sum = 0;
    for (int i = 0; i < nr; ++i) {
      const double r = (i + 0.5) / nr;
      for (int j = 0; j < nt; ++j) {
        const double t = pi * (j + 0.5) / nt;
        sum += std::pow(r * std::cos(t), a) * std::pow(r * std::sin(t), b) * r;
      }
    }
    return sum * (1.0 / nr) * (pi / nt);
  };
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const double exact = halfdisk_monomial(a, b).to_complex().real();
      EXPECT_NEAR(exact, numeric(a, b), 1e-5) << a << "," << b;
    }
  }
}

TEST(Torus, ConstantTerm) {
  EXPECT_EQ(torus_ct(laurent("z + 3 + 2*z^-1")), GaussRat(3));
  EXPECT_EQ(torus_ct(laurent("z^2")), GaussRat());
  const std::vector<std::string> z12 = {"z1", "z2"};
  EXPECT_EQ(torus_ct(laurent("(z1 + z1^-1)^2*(z2 + z2^-1)^2", z12)), GaussRat(4));
}

TEST(Functionals, Names) {
  EXPECT_EQ(parse_functional("gaussian"), FunctionalKind::gaussian);
  EXPECT_EQ(parse_functional("pairing"), FunctionalKind::hermite_pairing);
  EXPECT_EQ(parse_functional("hermite_pairing"), FunctionalKind::hermite_pairing);
  EXPECT_EQ(parse_functional("torus"), FunctionalKind::torus_ct);
  EXPECT_EQ(parse_functional("halfdisk"), FunctionalKind::halfdisk);
  EXPECT_FALSE(parse_functional("chi2").has_value());
  for (auto k : {FunctionalKind::gaussian, FunctionalKind::hermite_pairing, FunctionalKind::halfdisk,
                 FunctionalKind::torus_ct}) {
    EXPECT_EQ(parse_functional(to_string(k)), k);
  }
}
