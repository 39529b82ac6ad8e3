#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  args.insert(args.begin(), "weq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = weq::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(WEQ_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path)
{
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST(Cli, ClosingExample)
{
  const Result r = run({"paper-example"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, weq::cli::closing_example_expected);
  EXPECT_NE(r.out.find("S(E1) = (-X*Y*Z + X*Y - Z + 1, -X*Z + X, X^2*Y - 1)"), std::string::npos);
  EXPECT_NE(r.out.find("(X^3*Y - X*Z) * (X - 1, Y - 1, Z - 1)"), std::string::npos);
  EXPECT_NE(r.out.find("2|h(x)|+|h(y)|=|h(z)|"), std::string::npos);
}

TEST(Cli, Balanced)
{
  const Result r = run({"balanced", "xy = x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("not balanced"), std::string::npos);
  EXPECT_NE(run({"balanced", "xyxz = zxyx"}).out.find("balanced"), std::string::npos);
}

TEST(Cli, CheckTable)
{
  const Result ok = run({"check", "xz = zy; xzz = zzy", "x=ab; y=ba; z=aba"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("xz = zy  word: yes  polynomial: yes"), std::string::npos);
  EXPECT_NE(ok.out.find("not a solution"), std::string::npos);
  const Result bad = run({"check", "xz = zy", "x=a; y=b; z=a"});
  EXPECT_EQ(bad.code, 0);
  EXPECT_NE(bad.out.find("word: no  polynomial: no"), std::string::npos);
}

TEST(Cli, GoldenHyperplanesJson)
{
  // Golden file: schema and values must not drift.
  const Result r = run({"--json", "hyperplanes", "xyxz = zxyx\nxyxxz = zxxyx"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(weq::Json::parse(r.out), weq::Json::parse(slurp(data("closing_hyperplanes.json"))));
  const auto j = weq::Json::parse(r.out);
  EXPECT_EQ(j["hyperplane_constraints"][0], "2|h(x)|+|h(y)|=|h(z)|");
  EXPECT_EQ(j["bounds"]["sum"], 18);
  EXPECT_EQ(j["bounds"]["best"], 8);
  // Trailing --json works as well.
  EXPECT_EQ(run({"hyperplanes", "xyxz = zxyx\nxyxxz = zxxyx", "--json"}).out, r.out);
}

TEST(Cli, GoldenCatalogJson)
{
  const Result r = run({"search", "xz = zy", "--json", "--max-len", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(weq::Json::parse(r.out), weq::Json::parse(slurp(data("conjugacy_catalog.json"))));
}

TEST(Cli, SearchCsvAndParallel)
{
  const Result serial = run({"search", "xz = zy", "--csv", "--max-len", "5"});
  const Result par = run({"search", "xz = zy", "--csv", "--max-len", "5", "--parallel", "2"});
  EXPECT_EQ(serial.code, 0);
  EXPECT_EQ(serial.out, par.out);
  EXPECT_EQ(serial.out.substr(0, serial.out.find('\n')), "x,y,z,length_type,rank,class");
  EXPECT_NE(serial.out.find("ab,ba,a,2 2 1,2,0"), std::string::npos);
}

TEST(Cli, FactorPolynomialAndDeterminant)
{
  const Result p = run({"--json", "factor", "X^4*Y - X^3*Y - X^2*Z + X*Z"});
  EXPECT_EQ(p.code, 0);
  const auto j = weq::Json::parse(p.out);
  EXPECT_EQ(j["content"], "X");
  EXPECT_EQ(j["factors"][0]["lambda"], weq::Json({2, 1, -1}));
  EXPECT_EQ(j["factors"][1]["lambda"], weq::Json({1, 0, 0}));
  EXPECT_EQ(j["residual"], "1");

  const Result d = run({"factor", "--det", "--pair", "2", "3", "xyxz = zxyx", "xyxxz = zxxyx"});
  EXPECT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("X^4*Y - X^3*Y - X^2*Z + X*Z"), std::string::npos);
  EXPECT_NE(d.out.find("lambda (2,1,-1)"), std::string::npos);
}

TEST(Cli, EncodeAndDet)
{
  const Result e = run({"encode", "xyxz = zxyx"});
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("S_z = X^2*Y - 1"), std::string::npos);
  const Result d = run({"det", "xyxz = zxyx; xyxxz = zxxyx"});
  EXPECT_NE(d.out.find("t2,3 = X^4*Y - X^3*Y - X^2*Z + X*Z"), std::string::npos);
  EXPECT_NE(run({"det", "xy = yx; xy = yx"}).out.find("all determinants are zero"), std::string::npos);
}

TEST(Cli, Principal)
{
  const Result r = run({"principal", "xy = yx", "x=abab; y=ab"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x = AA"), std::string::npos);
  EXPECT_NE(r.out.find("A = ab"), std::string::npos);
  EXPECT_EQ(run({"principal", "xy = yx", "x=ab; y=ba"}).code, 1);
}

TEST(Cli, BoundsAndVerify)
{
  const Result b = run({"bounds", "xyxz = zxyx; xyxxz = zxxyx"});
  EXPECT_NE(b.out.find("best 8"), std::string::npos);
  const Result v = run({"--json", "bounds", "--verify", "--max-len", "8", "xyxz = zxyx; xyxxz = zxxyx"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(weq::Json::parse(v.out)["status"], "verified");
  const Result same = run({"bounds", "--verify", "xy = yx; xy = yx"});
  EXPECT_EQ(same.code, 0);
  EXPECT_NE(same.out.find("identical"), std::string::npos);
}

TEST(Cli, Fuzz)
{
  const Result r = run({"--json", "fuzz", "--seed", "3", "--cases", "300"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(weq::Json::parse(r.out)["discrepancies"], 0);
  EXPECT_EQ(run({"fuzz", "--seed", "3", "--cases", "300"}).out, run({"fuzz", "--seed", "3", "--cases", "300"}).out);
}

TEST(Cli, ReadsFiles)
{
  const Result r = run({"check", data("../../data/conjugacy.txt"), data("../../data/conjugacy_solution.txt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("word: yes"), std::string::npos);
}

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"encode", "xy yx"}).code, 2);
  EXPECT_EQ(run({"factor", "X^"}).code, 2);
  EXPECT_EQ(run({"factor", "X - X"}).code, 2);
  EXPECT_EQ(run({"hyperplanes", "xy = yx"}).code, 2);
  EXPECT_EQ(run({"check", "xy = yx", "x=a"}).code, 2);
  EXPECT_EQ(run({"search", "xy = yx", "--max-len", "30", "--alphabet", "3"}).code, 2);
  EXPECT_EQ(run({"factor", "--det", "--pair", "1", "5", "xy = yx; xx = yy"}).code, 2);
  const Result h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("paper-example"), std::string::npos);
}
