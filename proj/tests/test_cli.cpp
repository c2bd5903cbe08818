#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "hallwheels/cli.hpp"
#include "support.hpp"

using namespace hallwheels;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Invocations of the golden suite, with the problem stem expanded to a path.
std::vector<std::vector<std::string>> suite() {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(read_file(data_dir() + "/cli_suite.txt"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    args[1] = problem_path(args[1]);
    out.push_back(args);
  }
  return out;
}

std::vector<std::string> problem_stems() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(data_dir() + "/problems"))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("hallwheels_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

class ThreadsEnv {
 public:
  explicit ThreadsEnv(const char* value) {
    if (const char* old = std::getenv("HALLWHEELS_THREADS")) old_ = old;
    setenv("HALLWHEELS_THREADS", value, 1);
  }
  ~ThreadsEnv() {
    if (old_) setenv("HALLWHEELS_THREADS", old_->c_str(), 1);
    else unsetenv("HALLWHEELS_THREADS");
  }

 private:
  std::optional<std::string> old_;
};

}  // namespace

TEST(CliSuite, MatchesGoldensInProcess) {
  auto lines = suite();
  ASSERT_GE(lines.size(), 30u);
  for (auto args : lines) {
    args.push_back("--golden");
    args.push_back(data_dir() + "/golden");
    auto r = run_cli(args);
    EXPECT_EQ(r.code, 0) << args[0] << " " << args[1] << "\n" << r.err;
    EXPECT_TRUE(r.err.empty());
  }
}

TEST(CliSuite, OutputIndependentOfThreadCount) {
  for (const auto& args : suite()) {
    std::string one, four;
    {
      ThreadsEnv env("1");
      one = run_cli(args).out;
    }
    {
      ThreadsEnv env("4");
      four = run_cli(args).out;
    }
    EXPECT_EQ(one, four) << args[0] << " " << args[1];
    EXPECT_EQ(run_cli(args).out, one);
  }
}

TEST(ExitCodes, PreconditionFailures) {
  auto r = run_cli({"kernel", problem_path("gl4_adjoint"), "--lambda", "N1", "--nu", "L1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("\"OrderViolation\""), std::string::npos) << r.err;
  auto inv = run_cli({"induct", problem_path("gl3_standard"), "--lambda", "L", "--poly", "asym"});
  EXPECT_EQ(inv.code, 3);
  EXPECT_NE(inv.err.find("NotInvariantInput"), std::string::npos) << inv.err;
}

TEST(ExitCodes, ParseFailures) {
  EXPECT_EQ(run_cli({"frobnicate", problem_path("gl3_standard")}).code, 2);
  EXPECT_EQ(run_cli({"split"}).code, 2);
  EXPECT_EQ(run_cli({"split", data_dir() + "/problems/does_not_exist.json"}).code, 2);
  fs::path dir = scratch_dir("parse");
  std::ofstream(dir / "broken.json") << "{ \"schema\": 1, ";
  EXPECT_EQ(run_cli({"split", (dir / "broken.json").string(), "--lambda", "L"}).code, 2);
  std::ofstream(dir / "extra.json") << R"({"schema": 1, "root_datum": {"family": "GL", "n": 2}, "rep": {"kind": "adjoint"}, "bogus": 1})";
  auto r = run_cli({"canonical", (dir / "extra.json").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bogus"), std::string::npos);
}

TEST(ExitCodes, GoldenMismatch) {
  fs::path dir = scratch_dir("golden");
  std::vector<std::string> args{"kernel", problem_path("gl3_standard"), "--lambda", "L"};
  auto missing = args;
  missing.insert(missing.end(), {"--golden", dir.string()});
  EXPECT_EQ(run_cli(missing).code, 4);

  auto write = args;
  write.insert(write.end(), {"--write-golden", dir.string()});
  auto w = run_cli(write);
  ASSERT_EQ(w.code, 0);
  fs::path file = dir / "gl3_standard.kernel.L.json";
  ASSERT_TRUE(fs::exists(file));
  EXPECT_EQ(read_file(file.string()), w.out);
  EXPECT_EQ(run_cli(missing).code, 0);

  std::ofstream(file, std::ios::app) << " ";
  auto r = run_cli(missing);
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("golden_mismatch"), std::string::npos);
}

TEST(ExitCodes, ErrorsAreOneJsonLine) {
  auto r = run_cli({"kernel", problem_path("gl4_adjoint"), "--lambda", "N1", "--nu", "L1"});
  ASSERT_FALSE(r.err.empty());
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1);
  Json e = Json::parse(r.err);
  EXPECT_EQ(e["exit_code"], 3);
  EXPECT_TRUE(e.contains("message"));
}

TEST(Help, ExitsCleanly) {
  auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("wheels"), std::string::npos);
}

TEST(Schema, CanonicalFormIsAFixedPoint) {
  for (const auto& stem : problem_stems()) {
    SCOPED_TRACE(stem);
    ProblemSpec p = load_problem(problem_path(stem));
    std::string once = render_json(serialize_problem(p));
    std::string twice = render_json(serialize_problem(parse_problem_text(once)));
    EXPECT_EQ(once, twice);
    EXPECT_NO_THROW(validate(build_rep(p)));
  }
}

TEST(Schema, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_problem_text("[]"), ParseError);
  EXPECT_THROW(parse_problem_text("{not json"), ParseError);
  EXPECT_THROW(parse_problem_text(R"({"schema": 2, "root_datum": {"family": "GL", "n": 2}, "rep": {"kind": "adjoint"}})"),
               ParseError);
  EXPECT_THROW(parse_problem_text(R"({"schema": 1, "rep": {"kind": "adjoint"}})"), ParseError);
  EXPECT_THROW(parse_problem_text(R"({"schema": 1, "root_datum": {"family": "E", "n": 8}, "rep": {"kind": "adjoint"}})"),
               ParseError);
  EXPECT_THROW(parse_problem_text(R"({"schema": 1, "root_datum": {"family": "GL", "n": "2"}, "rep": {"kind": "adjoint"}})"),
               ParseError);
}

TEST(RenderJson, Layout) {
  Json j;
  j["a"] = Json::array({1, 2});
  j["b"] = Json::array();
  j["c"] = Json::array({Json{{"x", 1}}});
  j["d"] = "s";
  EXPECT_EQ(render_json(j),
            "{\n  \"a\": [1, 2],\n  \"b\": [],\n  \"c\": [\n    {\n      \"x\": 1\n    }\n  ],\n  \"d\": \"s\"\n}\n");
}

TEST(ReferenceJson, Sp4MatchesStoredTable) {
  EXPECT_EQ(render_json(reference_family_json(reference_family("sp4"))),
            read_file(data_dir() + "/golden/sp4_reference.json"));
}

TEST(ParsePolynomial, CanonicalAndExpressionForms) {
  LinearizedRep rep = standard_rep(build_root_datum(Family::GL, 2), {{}, {}, {}});
  LaurentPoly a = parse_polynomial("z1^2 - 3*z2", rep);
  LaurentPoly b = parse_polynomial("1*(2,0|) + -3*(0,1|)", rep);
  EXPECT_EQ(a, b);
  EXPECT_THROW(parse_polynomial("z3", rep), InvalidArgument);
}
