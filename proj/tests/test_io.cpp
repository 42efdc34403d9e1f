#include <gtest/gtest.h>

#include "moment_forge/errors.hpp"
#include "moment_forge/io.hpp"
#include "moment_forge/report.hpp"
#include "moment_forge/selftest/generators.hpp"
#include "test_util.hpp"

using namespace moment_forge;
using moment_forge::testing::laurent;
using moment_forge::testing::poly;
using moment_forge::testing::q;
namespace st = moment_forge::selftest;
using nlohmann::json;

namespace {

// Returns the ParseError raised by text, failing the test if none is.
ParseError parse_error(const std::string& text, Ring ring = Ring::polynomial,
                       std::vector<std::string> vars = {"x", "y"}) {
  try {
    parse_poly(PolySource{text, ring, std::move(vars)});
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(Parser, SquareOfXPlusIY) {
  const MPoly p = poly("(x+i*y)^2");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.coefficient(Exponents{2, 0}), GaussRat(1));
  EXPECT_EQ(p.coefficient(Exponents{1, 1}), GaussRat(mpq_class(0), mpq_class(2)));
  EXPECT_EQ(p.coefficient(Exponents{0, 2}), GaussRat(-1));
  EXPECT_EQ(format_poly(p, {"x", "y"}), "x^2 + 2*i*x*y - y^2");
}

TEST(Parser, LaurentTerms) {
  const LaurentPoly f = laurent("3/2*z^-1 + z");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient(Exponents{-1}), q(3, 2));
  EXPECT_EQ(laurent("(2*z)^-2"), laurent("1/4*z^-2"));
  EXPECT_EQ(laurent("z^+2"), laurent("z^2"));
}

TEST(Parser, GrammarDetails) {
  EXPECT_EQ(poly("-x - 1"), poly("-1 - x"));
  EXPECT_EQ(poly("2/4*x"), poly("1/2*x"));
  EXPECT_EQ(poly("((x))^0"), poly("1"));
  EXPECT_EQ(poly("i^2"), poly("-1"));
  EXPECT_EQ(poly("x\n  + y\t"), poly("y + x"));
  EXPECT_EQ(poly("x1*w_2", {"x1", "w_2"}), MPoly::monomial({1, 1}));
  EXPECT_EQ(poly("0*x"), MPoly(2));
}

TEST(Parser, PositionedErrors) {
  const ParseError neg = parse_error("x^-1");
  EXPECT_EQ(neg.reason(), "negative exponent in polynomial ring");
  EXPECT_EQ(neg.line(), 1u);
  EXPECT_EQ(neg.column(), 3u);

  const ParseError unknown = parse_error("x + q");
  EXPECT_EQ(unknown.column(), 5u);
  EXPECT_NE(unknown.reason().find("unknown identifier 'q'"), std::string::npos);

  const ParseError second_line = parse_error("x +\n  y +");
  EXPECT_EQ(second_line.line(), 2u);

  EXPECT_NE(parse_error("1/0*x").reason().find("zero denominator"), std::string::npos);
  EXPECT_NE(parse_error("1/*x").reason().find("malformed rational"), std::string::npos);
  EXPECT_NE(parse_error("2x").reason().find("'*'"), std::string::npos);
  EXPECT_NE(parse_error("(x+y").reason().find("')'"), std::string::npos);
  EXPECT_NE(parse_error("x/y").reason().find("rational"), std::string::npos);
  EXPECT_NE(parse_error("(x+y)^-1", Ring::laurent).reason().find("non-monomial"), std::string::npos);
  parse_error("");
  parse_error("x^");
  parse_error("x**y");
  parse_error("x^99999");
}

TEST(Parser, ResourceLimitsBecomeParseErrors) {
  parse_error(std::string(300, '(') + "x" + std::string(300, ')'));
  parse_error("x^9000*y^9000");
  parse_error("123456789^100000");
  {
    ScopedDegreeCap cap(10);
    parse_error("x^11");
  }
}

TEST(Formatter, Shapes) {
  EXPECT_EQ(format_poly(MPoly(2), {"x", "y"}), "0");
  EXPECT_EQ(format_poly(poly("-x"), {"x", "y"}), "-x");
  EXPECT_EQ(format_poly(poly("(1+2*i)*x - 1/3"), {"x", "y"}), "(1+2*i)*x - 1/3");
  EXPECT_EQ(format_poly(poly("-i*x*y^3"), {"x", "y"}), "-i*x*y^3");
  EXPECT_EQ(format_poly(laurent("z^-2 + z"), {"z"}), "z + z^-2");
  EXPECT_THROW(format_poly(poly("x"), {"x"}), UsageError);
}

TEST(Formatter, RoundTripAndIdempotence) {
  st::Rng rng(41);
  const std::vector<std::string> names = {"x", "y", "z1", "w_2"};
  for (int k = 0; k < 500; ++k) {
    st::PolyShape shape;
    shape.arity = static_cast<std::size_t>(rng.uniform(1, 4));
    shape.max_degree = 6;
    shape.max_terms = 8;
    const std::vector<std::string> vars(names.begin(), names.begin() + static_cast<long>(shape.arity));
    const MPoly p = st::random_poly(rng, shape);
    const std::string text = format_poly(p, vars);
    const MPoly back = parse_mpoly(text, vars);
    ASSERT_EQ(back, p) << text;
    ASSERT_EQ(format_poly(back, vars), text);
  }
}

TEST(Parser, FuzzedInputsOnlyRaisePositionedErrors) {
  st::Rng rng(42);
  const std::string alphabet = "xyi0123456789+-*/^()  \n.";
  for (int k = 0; k < 20000; ++k) {
    std::string input;
    const long length = rng.uniform(0, 20);
    for (long j = 0; j < length; ++j) {
      input += k % 2 ? static_cast<char>(rng.uniform(0, 255))
                     : alphabet[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(alphabet.size()) - 1))];
    }
    try {
      const AnyPoly p = parse_poly(PolySource{input, k % 3 ? Ring::polynomial : Ring::laurent, {"x", "y"}});
      // Anything accepted must survive a round trip.
      const std::string text = format_poly(p, {"x", "y"});
      ASSERT_EQ(format_poly(parse_poly(PolySource{text, Ring::laurent, {"x", "y"}}), {"x", "y"}), text);
    } catch (const ParseError& e) {
      ASSERT_GE(e.line(), 1u);
      ASSERT_GE(e.column(), 1u);
    }
  }
}

TEST(Variables, ListsAndRanges) {
  EXPECT_EQ(parse_variable_list("x,y"), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(parse_variable_list("w1..w3,z1..z3"),
            (std::vector<std::string>{"w1", "w2", "w3", "z1", "z2", "z3"}));
  EXPECT_THROW(parse_variable_list("x,i"), UsageError);
  EXPECT_THROW(parse_variable_list("x,x"), UsageError);
  EXPECT_THROW(parse_variable_list("x,,y"), UsageError);
  EXPECT_THROW(parse_variable_list("2x"), UsageError);
  EXPECT_THROW(parse_variable_list("x3..y1"), UsageError);
  EXPECT_THROW(parse_mpoly("x", {"x", "x"}), UsageError);
}

TEST(Report, EnvelopeValidates) {
  const VanishingProfile profile = vanish_scan(poly("x^2 - 1", {"x"}), FunctionalKind::gaussian, 3);
  const json doc = report_envelope("moments", {"moments", "-M", "3"}, to_json(profile, {"x"}));
  EXPECT_TRUE(validate_report(doc).empty());
  EXPECT_EQ(doc["schema"], "moment-forge/1");
  EXPECT_EQ(doc["result"]["values"][1]["value"], "2");

  const CrosscheckReport cross = gaussian_torus_crosscheck(poly("x*y"), default_pairing(2), 3);
  EXPECT_TRUE(validate_report(report_envelope("crosscheck", {}, to_json(cross, {"x", "y"}))).empty());
  const MZProbeReport mz = mz_probe(poly("(x+i*y)^2"), poly("x"), FunctionalKind::halfdisk, 3);
  EXPECT_TRUE(validate_report(report_envelope("probe", {}, to_json(mz, {"x", "y"}))).empty());
}

TEST(Report, ValidatorRejectsProblems) {
  json doc = report_envelope("x", {}, json{{"value", "1/2"}});
  EXPECT_TRUE(validate_report(doc).empty());
  doc["result"]["value"] = 0.5;
  EXPECT_FALSE(validate_report(doc).empty());
  doc["result"]["value"] = "half";
  EXPECT_FALSE(validate_report(doc).empty());
  doc["result"] = json{{"nested", {{"ratio", 1.5}}}};
  EXPECT_FALSE(validate_report(doc).empty());
  doc = report_envelope("x", {}, json::object());
  doc["schema"] = "moment-forge/0";
  EXPECT_FALSE(validate_report(doc).empty());
  EXPECT_FALSE(validate_report(json::array()).empty());
}
