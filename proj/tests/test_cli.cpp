#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ternary/cli.hpp"
#include "ternary/io.hpp"

using namespace ternary;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

// Sets an environment variable for the lifetime of the object.
class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Io, SeriesRoundTrip) {
  const QSeries s(std::vector<std::int64_t>{1, -6, 12, 0, 6});
  const Json j = toJson(s);
  EXPECT_EQ(j.dump(), R"({"trunc":4,"coeffs":[1,-6,12,0,6]})");
  EXPECT_EQ(seriesFromJson(Json::parse(j.dump())), s);
  EXPECT_THROW(seriesFromJson(Json::parse(R"({"trunc":3,"coeffs":[1]})")), DomainError);
}

TEST(Io, FormRoundTrip) {
  const TernaryForm f{3, 8, 8, -7, 2, 2};
  EXPECT_EQ(toJson(f).dump(), "[3,8,8,-7,2,2]");
  EXPECT_EQ(formFromJson(toJson(f)), f);
  EXPECT_THROW(formFromJson(Json::parse("[1,2,3]")), DomainError);
}

TEST(Io, ReportJsonOmitsTimingByDefault) {
  VerificationReport r;
  r.id = "E2.1";
  r.order = 10;
  r.status = Status::Fail;
  r.firstMismatch = Mismatch{3, 4, 5};
  r.elapsedSeconds = 0.5;
  EXPECT_EQ(toJson(r, false).dump(),
            R"({"id":"E2.1","order":10,"status":"fail","firstMismatch":{"index":3,"lhs":4,"rhs":5}})");
  EXPECT_TRUE(toJson(r, true).contains("elapsed"));
}

TEST(Io, CsvAndTableLayouts) {
  VerificationReport a;
  a.id = "A";
  a.order = 5;
  a.status = Status::Pass;
  VerificationReport b = a;
  b.id = "B";
  b.status = Status::Fail;
  b.firstMismatch = Mismatch{2, 1, 0};
  std::ostringstream csv, table;
  writeReports(csv, {a, b}, Format::Csv, false);
  EXPECT_EQ(csv.str(), "id,order,status,index,lhs,rhs\nA,5,pass,,,\nB,5,fail,2,1,0\n");
  writeReports(table, {a, b}, Format::Table, false);
  EXPECT_NE(table.str().find("1 passed, 1 failed"), std::string::npos);
  EXPECT_THROW(parseFormat("xml"), DomainError);
}

TEST(Cli, CountAndSums) {
  const CliRun c = run({"count", "--form", "1,1,1,0,0,0", "--n", "29"});
  EXPECT_EQ(c.code, 0);
  // 29 = 0+4+25 = 4+9+16 gives 24 + 48 signed arrangements.
  EXPECT_EQ(c.out, "72\n");
  const CliRun d = run({"count", "--form", "2,2,2,-1,1,1", "--n", "0", "--format", "json"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "{\"form\":[2,2,2,-1,1,1],\"n\":0,\"count\":1}\n");
  const CliRun s = run({"s", "--max", "3"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, "0 1\n1 6\n2 12\n3 8\n");
  const CliRun j = run({"s", "--max", "3", "--format", "json"});
  EXPECT_EQ(j.out, "{\"trunc\":3,\"coeffs\":[1,6,12,8]}\n");
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--id", "E2.1", "--order", "100"}).code, 0);
  EXPECT_EQ(run({"verify", "--id", "BOGUS"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"verify", "--id", "E2.1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"count", "--form", "1,1,-1,0,0,0", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"genus", "--p", "2"}).code, 2);
  EXPECT_EQ(run({"prop54", "--p", "9"}).code, 2);
  const CliRun list = run({"verify", "--list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("EFINAL"), std::string::npos);
}

TEST(Cli, JsonOutputIsReproducible) {
  const std::vector<std::string> args = {"verify", "--id", "E2.1,E2.6,ECH", "--order", "200", "--format", "json"};
  const CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("elapsed"), std::string::npos);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_TRUE(j["firstMismatch"].is_null());
    ++count;
  }
  EXPECT_EQ(count, 3);
  EXPECT_NE(run({"verify", "--id", "E2.1", "--order", "50", "--format", "json", "--timing"}).out.find("elapsed"),
            std::string::npos);
}

TEST(Cli, OrderFromEnvironment) {
  {
    ScopedEnv env("TERNARY_ORDER", "50");
    EXPECT_EQ(defaultOrder(), 50);
    const CliRun r = run({"verify", "--id", "E2.1", "--format", "json"});
    EXPECT_EQ(Json::parse(r.out)["order"], 50);
    const CliRun over = run({"verify", "--id", "E2.1", "--order", "70", "--format", "json"});
    EXPECT_EQ(Json::parse(over.out)["order"], 70);
  }
  {
    ScopedEnv env("TERNARY_ORDER", "abc");
    EXPECT_THROW(defaultOrder(), DomainError);
    EXPECT_EQ(run({"verify", "--id", "E2.1"}).code, 2);
  }
  EXPECT_EQ(defaultOrder(), 1000);
}

TEST(Cli, GenusCommands) {
  const CliRun p = run({"genus", "--p", "23"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("TG1 discriminant 529"), std::string::npos);
  EXPECT_NE(p.out.find("TG2 discriminant 8464"), std::string::npos);
  const CliRun d = run({"genus", "--disc", "4624", "--format", "json"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(Json::parse(d.out)["genera"].size(), 12u);
  const CliRun pr = run({"prop54", "--p", "3,7", "--max-n", "200", "--format", "json"});
  EXPECT_EQ(pr.code, 0);
  std::istringstream lines(pr.out);
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(Json::parse(first)["terms"][0]["coefficient"], 2);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "ternary_cli_output_test.txt";
  const CliRun r = run({"s", "--max", "2", "-o", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "0 1\n1 6\n2 12\n");
  std::filesystem::remove(path);
}
