#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "moment_forge/cli.hpp"
#include "moment_forge/report.hpp"

using moment_forge::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, MomentsAllZero) {
  const Outcome r = invoke({"moments", "--vars", "x,y", "--poly", "(x+i*y)^2", "--functional", "gaussian", "-M", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "all zero for m = 1..10")) << r.out;
}

TEST(Cli, ProbeReportsCandidateWithExitOne) {
  const Outcome r = invoke({"probe", "--vars", "x,y", "--poly", "(x+i*y)^2", "--q", "x+i*y",
                            "--functional", "halfdisk", "-M", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "2/15*i"));
  EXPECT_TRUE(contains(r.out, "2/35*i"));
  EXPECT_TRUE(contains(r.out, "counterexample candidate: yes"));
}

TEST(Cli, ProbeWithEventualVanishingExitsZero) {
  const Outcome r = invoke({"probe", "--vars", "x,y", "--poly", "(x+i*y)^2", "--q", "(x-i*y)^2", "-M", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "last nonzero: 1"));
}

TEST(Cli, CertificateLine) {
  const Outcome r = invoke({"cert", "--vars", "x", "--poly", "1 - x^2", "-p", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Φ(F^5) = -544 ≡ 1 (mod 5): certified nonvanishing\n");
  const Outcome inconclusive = invoke({"cert", "--vars", "x", "--poly", "x", "-p", "3"});
  EXPECT_EQ(inconclusive.code, 0);
  EXPECT_TRUE(contains(inconclusive.out, "inconclusive"));
  EXPECT_EQ(invoke({"cert", "--vars", "x", "--poly", "x/2", "-p", "3"}).code, 2);
  EXPECT_EQ(invoke({"cert", "--vars", "x", "--poly", "1/2*x", "-p", "3"}).code, 2);
  EXPECT_EQ(invoke({"cert", "--vars", "x", "--poly", "1 + x", "-p", "4"}).code, 2);
}

TEST(Cli, OtherFunctionals) {
  EXPECT_TRUE(contains(invoke({"pairing", "--vars", "w,z", "--poly", "w^3*z^3 + w*z^2"}).out, "F(P) = 6"));
  EXPECT_TRUE(contains(invoke({"en", "--vars", "w,z", "--poly", "w^2*z^3"}).out, "E(P) = 6*z"));
  EXPECT_TRUE(contains(invoke({"halfdisk", "--vars", "x,y", "--poly", "x^2 + y"}).out,
                       "half-disk integral = 2/3 + (1/8)*pi"));
  EXPECT_TRUE(contains(invoke({"torus", "--vars", "z", "--poly", "(z + z^-1)^4"}).out, "CT(f) = 6"));
  EXPECT_TRUE(contains(invoke({"moments", "--vars", "z", "--poly", "z + z^-1", "--functional", "torus", "-M", "2"}).out,
                       "first nonzero: 2"));
}

TEST(Cli, EnShiftIdentityAtPoint) {
  const Outcome r = invoke({"en", "--vars", "w1..w2,z1..z2", "--poly", "w1*z1^2 + w2^2*z2^3 - 7", "--at", "1/2, 2-1*i"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "shift identity: holds")) << r.out;
  EXPECT_EQ(invoke({"en", "--vars", "w,z", "--poly", "w*z", "--at", "1,2"}).code, 2);
}

TEST(Cli, ReduceAndCrosscheck) {
  const Outcome r = invoke({"reduce", "--vars", "x,y", "--poly", "x*y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "F_L = -1/4*i*z^2 + 1/4*i*z^-2")) << r.out;
  const Outcome c = invoke({"crosscheck", "--vars", "x1,x2,y1,y2", "--poly", "x1*y1*(x2^2 + y2^2)", "-M", "4"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(contains(c.out, "crosscheck: holds"));
  const Outcome paired = invoke({"reduce", "--vars", "a,b", "--poly", "a^2 + b^2", "--pairs", "b:a"});
  EXPECT_EQ(paired.code, 0);
  EXPECT_TRUE(contains(paired.out, "pair 1: (b, a)"));
  const Outcome bad = invoke({"reduce", "--vars", "x,y", "--poly", "x^2 + y"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(contains(bad.err, "(x, y)"));
}

TEST(Cli, OnePS) {
  const Outcome r = invoke({"one-ps", "--vars", "x,y", "--poly", "(x+i*y)^2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "min t-exponent -2, not a member"));
  EXPECT_TRUE(contains(r.out, "min t-exponent 2, member"));
  const Outcome fixed = invoke({"one-ps", "--vars", "x,y", "--poly", "x", "--lambda", "3/5,4/5;-4/5,3/5"});
  EXPECT_EQ(fixed.code, 0);
  EXPECT_TRUE(contains(fixed.out, "min t-exponent 0"));
  const Outcome bad = invoke({"one-ps", "--vars", "x,y", "--poly", "x", "--lambda", "t,0;0,t"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(contains(bad.err, "[1][1]")) << bad.err;
  EXPECT_EQ(invoke({"one-ps", "--vars", "x,t", "--poly", "x"}).code, 2);
}

TEST(Cli, UsageErrorsExitTwoWithSynopsis) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"moments", "--vars", "x", "--poly", "x^-1"},
           {"moments", "--vars", "x", "--poly", "x", "-M", "0"},
           {"moments", "--vars", "x", "--poly", "x", "--output", "yaml"},
           {"moments", "--vars", "x", "--poly", "x", "--functional", "chi2"},
           {"moments", "--poly", "x"},
           {"moments", "--vars", "x", "--poly", "x", "--degree-cap", "0"},
           {"halfdisk", "--vars", "x", "--poly", "x"},
           {"selftest", "--only", "12"},
       }) {
    const Outcome r = invoke(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "<none>" : args[0]);
    EXPECT_TRUE(contains(r.err, "Usage:")) << r.err;
  }
  EXPECT_TRUE(contains(invoke({"moments", "--vars", "x", "--poly", "x^-1"}).err, "expr     :="));
}

TEST(Cli, DegreeCapFlag) {
  EXPECT_EQ(invoke({"moments", "--vars", "x", "--poly", "x^3", "-M", "5", "--degree-cap", "12"}).code, 2);
  EXPECT_EQ(invoke({"moments", "--vars", "x", "--poly", "x^3", "-M", "4", "--degree-cap", "12"}).code, 0);
}

TEST(Cli, HelpExitsZero) {
  const Outcome r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "crosscheck"));
}

TEST(Cli, JsonOutputValidatesForEveryCommand) {
  const std::vector<std::vector<std::string>> commands = {
      {"moments", "--vars", "x,y", "--poly", "x^2 + y", "-M", "4"},
      {"probe", "--vars", "x,y", "--poly", "(x+i*y)^2", "--q", "x+i*y", "--functional", "halfdisk", "-M", "3"},
      {"pairing", "--vars", "w,z", "--poly", "w*z"},
      {"en", "--vars", "w,z", "--poly", "w*z^2", "--at", "3"},
      {"halfdisk", "--vars", "x,y", "--poly", "1 + y"},
      {"torus", "--vars", "z", "--poly", "z + 2"},
      {"reduce", "--vars", "x,y", "--poly", "x*y"},
      {"crosscheck", "--vars", "x,y", "--poly", "x*y", "-M", "3"},
      {"cert", "--vars", "x", "--poly", "1 - x^2", "-p", "5"},
      {"one-ps", "--vars", "x,y", "--poly", "x + i*y"},
      {"selftest", "--only", "2,C03", "--fuzz", "10"},
  };
  for (auto args : commands) {
    args.insert(args.end(), {"--output", "json"});
    const Outcome r = invoke(args);
    ASSERT_LE(r.code, 1) << args[0] << ": " << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["command"]["name"], args[0]);
    const auto problems = moment_forge::validate_report(doc);
    EXPECT_TRUE(problems.empty()) << args[0] << ": " << (problems.empty() ? "" : problems[0]);
  }
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"selftest", "--only", "4,6,8", "--seed", "7"};
  const Outcome a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> probe = {"probe", "--vars", "x,y", "--poly", "x^2 - y", "--q", "y", "-M", "6", "--output", "json"};
  EXPECT_EQ(invoke(probe).out, invoke(probe).out);
}
