#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>

#include "commands.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "singcurve/errors.hpp"
#include "support.hpp"

using namespace singcurve;
using namespace singcurve::cli;

namespace {

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> c = {
      "x^2 - y^3",
      "x^2-y^5",
      "y^3 + y*x^4",
      "y^3+x^6",
      "x^4 + 3x^2*y + x^2 - y^3",
      "x^4+3*x^2*y+x^2-y^3",
      "(y^2 - x^3)^2 - 4*x^5*y - x^7",
      "x*y*(x - y)",
      "x*y",
      "y",
      "x",
      "-x^2 + y^3",
      "+y^2 - x^3",
      "y^2 - 2i*x^3",
      "i*x + y",
      "2i x^2 - y^2",
      "(1 + i)*y^2 - x^3",
      "1/2*x^2 - y^3",
      "x^2/3 - y^3",
      "(x+y)^3 - x*y",
      "((x))^2 - y^5",
      "y^2 - x^2*(x + 1)",
      "y^2 - x^2 - x^3",
      "  y ^ 2   -   x ^ 3 ",
      "x^0*y - x",
      "007*y - x^2",
      "y*(y - x^2)*(y + x^2)",
      "(y - x)^1",
      "y^4 - 2*x^3*y^2 + x^6 - x^7",
      "y^3 - x^7 + x^5*y",
      "x^2 + y^2",
      "x^3 - y^3",
      "y*(x - y)*(x + y)*(x - 2*y)",
      "y^2 - x^4 - x^5",
      "3*y - 3*x^2",
      "param: t^4, t^6 + t^7",
      "param: t^6, t^6+9t^12+2t^27-4t^81+t^83",
      "param: t^3, t^2 + t^4",
      "param: t^2, t^3",
      "param:t,0",
      "param: t^2 + t^3, t^5",
      "param: (t + t^2)^2, t^5 - i*t^7",
      "param: 2t^4, -t^6 + 1/3*t^9",
      "param: t^5, t^7*(1 + t)",
      "char: (4;6,7)",
      "char:(6;27,83)",
      "char: (1)",
      "char: (2; 3)",
      "char: ( 12 ; 18 , 20 , 21 )",
      "semigroup: 4,6,13",
      "semigroup: 2, 3",
      "semigroup:6,27,110",
      "symbol: S(26) + S(12) + S(1) - S(13) - S(6) - S(4)",
      "symbol: S(6)+S(1)-S(3)-S(2)",
      "symbol: -S(4) + 2*S(2)",
      "symbol: 3 * S(5) - S(1)",
      "t^2 - t + 1",
      "t^4 - t^2 + 1",
      "(t^2 - t + 1)*(t^4 - t^2 + 1)",
      "t^16 - t^15 + t^12 - t^11 + t^10 - t^9 + t^8 - t^7 + t^6 - t^5 + t^4 - t + 1",
      "-1 + t",
      "x^10*y^10 - x^3 + y^2",
  };
  return c;
}

Json run1(const std::string& cmd, std::vector<std::string> in, Options o = {}) { return run(cmd, in, o); }

}  // namespace

TEST(Parser, RoundTripOverCorpus) {
  ASSERT_GE(corpus().size(), 50u);
  for (const auto& s : corpus()) {
    InputSpec in = parse_input(s);
    EXPECT_EQ(strip(in.print()), strip(s)) << s;
    // printing is a fixed point
    EXPECT_EQ(parse_input(in.print()).print(), in.print()) << s;
  }
}

TEST(Parser, KindsAreRecognized) {
  EXPECT_EQ(parse_input("x^2 - y^3").kind, InputSpec::Kind::Implicit);
  EXPECT_EQ(parse_input("param: t^4, t^6 + t^7").kind, InputSpec::Kind::Parametrization);
  EXPECT_EQ(parse_input("y^3 + y*x^4").kind, InputSpec::Kind::Implicit);
  EXPECT_EQ(parse_input("char: (4;6,7)").kind, InputSpec::Kind::Characteristic);
  EXPECT_EQ(parse_input("semigroup: 4,6,13").kind, InputSpec::Kind::Semigroup);
  EXPECT_EQ(parse_input("symbol: S(1)").kind, InputSpec::Kind::Symbol);
  EXPECT_EQ(parse_input("t^2 - t + 1").kind, InputSpec::Kind::Univariate);
}

TEST(Parser, EvaluatesOverGaussianRationals) {
  EXPECT_EQ(to_bipoly(*parse_input("y^3 + y*x^4").expr), testing_support::poly("x^4*y + y^3"));
  auto b = to_bipoly(*parse_input("(1 + i)^2*x/2").expr);
  EXPECT_EQ(b, testing_support::poly("i*x"));
}

TEST(Parser, ErrorsCarryPositions) {
  auto at = [](const std::string& s) {
    try {
      parse_input(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position);
    }
    return -1L;
  };
  EXPECT_EQ(at("x^2 - 1.5*y"), 6);
  EXPECT_EQ(at("x^2 + )"), 6);
  EXPECT_EQ(at("x^-2"), 2);
  EXPECT_EQ(at("x^y"), 2);
  EXPECT_EQ(at("z + x"), 0);
  EXPECT_EQ(at("(x + y"), 6);
  EXPECT_EQ(at("x*y + t"), 6);
  EXPECT_EQ(at("param: t^2"), 10);
  EXPECT_EQ(at("param: x^2, t"), 7);
  EXPECT_EQ(at("char: (4;6,7"), 12);
  EXPECT_EQ(at("semigroup: 4,,6"), 13);
  EXPECT_EQ(at("symbol: S(2) S(3)"), 13);
  EXPECT_EQ(at(""), 0);
  try {
    parse_input("x + 0.5");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported coefficient"), std::string::npos);
  }
}

TEST(Run, CharacteristicOfLongParametrization) {
  auto r = run1("char", {"param: t^6, t^6+9t^12+2t^27-4t^81+t^83"});
  EXPECT_EQ(r["results"][0]["branches"][0]["characteristic"], "(6;27,83)");
}

TEST(Run, EquisingularWithWitness) {
  auto r = run1("equisingular", {"y^3+x^6", "y^3+y*x^4"});
  EXPECT_EQ(r["results"][0]["equisingular"], true);
  EXPECT_EQ(r["results"][0]["witness"].size(), 3u);
  EXPECT_THROW(run1("equisingular", {"y^3+x^6"}), UsageError);
}

TEST(Run, AlexanderReport) {
  auto r = run1("alexander", {"param: t^4, t^6+t^7"});
  const auto& b = r["results"][0]["branches"][0];
  EXPECT_EQ(b["symbol"], "S(26) + S(12) + S(1) - S(13) - S(6) - S(4)");
  EXPECT_EQ(b["cyclotomic_form"], "Phi_26*Phi_12");
  EXPECT_EQ(b["degree"], 16);
}

TEST(Run, SemigroupReportListsGaps) {
  auto r = run1("semigroup", {"char: (4;6,7)"});
  const auto& b = r["results"][0]["branches"][0];
  EXPECT_EQ(b["generators"], Json({4, 6, 13}));
  EXPECT_EQ(b["frobenius"], 15);
  EXPECT_EQ(b["gaps"], Json({1, 2, 3, 5, 7, 9, 11, 15}));
}

TEST(Run, InfinityEncoding) {
  auto r = run1("branches", {"y^3 + x^6"});
  EXPECT_EQ(r["results"][0]["intersection_matrix"][0][0], "inf");
  EXPECT_EQ(r["results"][0]["intersection_matrix"][0][1], 2);
  auto text = serialize(r, Format::Text);
  EXPECT_NE(text.find("[∞, 2, 2]"), std::string::npos);
  EXPECT_EQ(text.find("inf"), std::string::npos);
}

TEST(Run, SwappedFrameIsAnnotated) {
  auto r = run1("branches", {"x^2 - y^3"});
  EXPECT_EQ(r["results"][0]["branches"][0]["frame"], "(x,y) swapped");
  EXPECT_NE(serialize(r, Format::Text).find("frame: (x,y) swapped"), std::string::npos);
  EXPECT_EQ(r["frame_notes"][0], "branch 1.1: frame: (x,y) swapped");
}

TEST(Run, ErratumAccompaniesContactValues) {
  auto r = run1("contact", {"param: t^4, t^6+t^7", "param: t^2, t^3"});
  EXPECT_EQ(r["erratum_notes"].size(), 1u);
  EXPECT_EQ(r["results"][0]["contact"], "7/4");
  EXPECT_FALSE(r["results"][0].contains("minimum"));
  Options v;
  v.verbose = true;
  auto rv = run1("contact", {"param: t^4, t^6+t^7", "param: t^2, t^3"}, v);
  EXPECT_EQ(rv["results"][0]["minimum"], "3/2");
  auto ri = run1("intersect", {"x^2 - y^3", "x^2 - y^5"});
  EXPECT_TRUE(ri["erratum_notes"].empty());
  EXPECT_EQ(ri["results"][0]["total"], 6);
  auto riv = run1("intersect", {"x^2 - y^3", "x^2 - y^5"}, v);
  EXPECT_EQ(riv["erratum_notes"].size(), 1u);
}

TEST(Run, SchemaKeys) {
  auto r = run1("implicitize", {"param: t^3, t^2 + t^4"});
  std::vector<std::string> keys;
  for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "erratum_notes", "frame_notes", "inputs", "order_used",
                                            "results", "schema_version"}));
  EXPECT_EQ(r["results"][0]["branches"][0]["polynomial"], "y^3 - 3*x^2*y - x^4 - x^2");
}

TEST(Run, RecoverFromSymbolAndPolynomial) {
  EXPECT_EQ(run1("recover", {"symbol: S(26) + S(12) + S(1) - S(13) - S(6) - S(4)"})["results"][0]["characteristic"],
            "(4;6,7)");
  EXPECT_EQ(run1("recover", {"(t^12 - t^11 + t^10 - t^9 + t^8 - t^7 + t^6 - t^5 + t^4 - t^3 + t^2 - t + 1)*(t^4 - t^2 + 1)"})
                ["results"][0]["characteristic"],
            "(4;6,7)");
  EXPECT_EQ(run1("recover", {"semigroup: 4,6,13"})["results"][0]["characteristic"], "(4;6,7)");
}

TEST(Run, OrderOption) {
  Options o;
  o.order = 5;
  auto r = run1("branches", {"y^2 - x^3 - x^7"}, o);
  EXPECT_EQ(r["order_used"], 5);
}

TEST(Run, DeterministicOutput) {
  for (auto fmt : {Format::Text, Format::Json}) {
    auto a = serialize(run1("intersect", {"y^3+x^6", "y^3+y*x^4"}), fmt);
    auto b = serialize(run1("intersect", {"y^3+x^6", "y^3+y*x^4"}), fmt);
    EXPECT_EQ(a, b);
  }
}

TEST(Run, BatchMatchesSequential) {
  std::vector<std::vector<std::string>> groups = {
      {"x^2 - y^3"}, {"param: t^4, t^6+t^7"}, {"y^3 + x^6"}, {"x^2 + )"}, {"y*(y - x^2)"}};
  int s1 = 0, s3 = 0;
  auto one = run_batch("char", groups, {}, 1, s1);
  auto three = run_batch("char", groups, {}, 3, s3);
  EXPECT_EQ(one.dump(), three.dump());
  EXPECT_EQ(s1, 2);
  EXPECT_EQ(one["results"][1][0]["branches"][0]["characteristic"], "(4;6,7)");
}

TEST(Run, ExitCodes) {
  auto code = [](const std::string& cmd, std::vector<std::string> in) {
    try {
      run1(cmd, in);
    } catch (const std::exception& e) {
      return exit_code_of(e);
    }
    return 0;
  };
  EXPECT_EQ(code("char", {"x^2 - y^3"}), 0);
  EXPECT_EQ(code("char", {"x^2 - 0.5*y"}), 2);
  EXPECT_EQ(code("nonsense", {"x"}), 2);
  EXPECT_EQ(code("branches", {"(y - x^2)^2"}), 3);
  EXPECT_EQ(code("branches", {"x + 1"}), 3);
  EXPECT_EQ(code("recover", {"symbol: S(4)"}), 3);
  EXPECT_EQ(code("char", {"char: (4;6)"}), 3);
  singcurve::InternalError ie("paths disagree");
  EXPECT_EQ(exit_code_of(ie), 4);
}
