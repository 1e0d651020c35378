#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace frobrr::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coeffs prints the table") {
  const auto r = invoke({"coeffs", "--p", "2"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("[(0, 7), (1, -4), (2, 1)]") != std::string::npos);
}

TEST_CASE("verify-main exit codes") {
  CHECK(invoke({"verify-main", "--p", "3", "--assume-mumford"}).code == kExitPass);
  const auto fail = invoke({"verify-main", "--p", "3"});
  CHECK(fail.code == kExitFail);
  CHECK(fail.out.find("residual: 72*lam - 6*ww") != std::string::npos);
}

TEST_CASE("every command has pass, fail and usage paths where defined") {
  CHECK(invoke({"verify-grading", "--p", "5"}).code == kExitPass);
  CHECK(invoke({"verify-deligne", "--assume-mumford"}).code == kExitPass);
  CHECK(invoke({"verify-deligne"}).code == kExitFail);
  CHECK(invoke({"verify-mumford", "--n", "2", "--assume-mumford"}).code == kExitPass);
  CHECK(invoke({"verify-mumford", "--n", "2"}).code == kExitFail);
  CHECK(invoke({"verify-remark", "--n", "3", "--p", "5", "--assume-mumford"}).code == kExitPass);
  CHECK(invoke({"verify-remark", "--n", "3", "--p", "5"}).code == kExitFail);
  CHECK(invoke({"verify-arr", "--p", "7"}).code == kExitPass);
  CHECK(invoke({"verify-arr", "--p", "7", "--d", "10"}).code == kExitPass);
  CHECK(invoke({"verify-cube"}).code == kExitPass);
  CHECK(invoke({"verify-cube", "--t", "5", "--p", "2"}).code == kExitPass);
  CHECK(invoke({"frobenius", "--p", "3", "--d", "5"}).code == kExitPass);
  CHECK(invoke({"sweep", "--p-max", "5", "--assume-mumford"}).code == kExitPass);
  CHECK(invoke({"sweep", "--p-max", "5"}).code == kExitFail);

  // Usage and validation errors.
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"bogus"}).code == kExitUsage);
  CHECK(invoke({"coeffs"}).code == kExitUsage);
  CHECK(invoke({"coeffs", "--p", "4"}).code == kExitUsage);
  CHECK(invoke({"coeffs", "--p", "two"}).code == kExitUsage);
  CHECK(invoke({"verify-main"}).code == kExitUsage);
  CHECK(invoke({"verify-main", "--p", "1"}).code == kExitUsage);
  CHECK(invoke({"verify-grading", "--p", "9"}).code == kExitUsage);
  CHECK(invoke({"verify-mumford"}).code == kExitUsage);
  CHECK(invoke({"verify-mumford", "--n", "-1"}).code == kExitUsage);
  CHECK(invoke({"verify-remark", "--n", "1"}).code == kExitUsage);
  CHECK(invoke({"verify-arr"}).code == kExitUsage);
  CHECK(invoke({"verify-cube", "--t", "5"}).code == kExitUsage);
  CHECK(invoke({"frobenius", "--p", "3"}).code == kExitUsage);
  CHECK(invoke({"sweep", "--p-max", "1"}).code == kExitUsage);
  CHECK(invoke({"verify-deligne", "--format", "xml"}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitPass);
}

TEST_CASE("validate rejects incomplete configs") {
  RunConfig c;
  c.command = Command::verify_main;
  CHECK(validate(c).has_value());
  c.p = 6;
  CHECK(validate(c).has_value());
  c.p = 7;
  CHECK_FALSE(validate(c).has_value());
  std::ostringstream out, err;
  c.p = 6;
  CHECK(run(c, out, err) == kExitUsage);
}

TEST_CASE("json report schema") {
  const auto r = invoke({"verify-main", "--p", "2", "--format", "json"});
  CHECK(r.code == kExitFail);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "verify-main");
  REQUIRE(doc["reports"].size() == 1);
  const auto& item = doc["reports"][0];
  std::vector<std::string> keys;
  for (const auto& [k, v] : item.items()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"elapsed_ms", "identity", "lhs", "params", "rhs", "status"});
  CHECK(item["identity"] == "main_degree");
  CHECK(item["status"] == "fail");
  CHECK(item["lhs"] == "8*LL - 8*Lw + 16*lam");
  CHECK(item["rhs"] == "8*LL - 8*Lw + 4*lam + ww");
  CHECK(item["params"]["p"] == 2);
  CHECK(item["params"]["assume_mumford"] == false);
  CHECK(item["elapsed_ms"].is_number());
  CHECK(doc["summary"]["failed"] == 1);
}

TEST_CASE("json output is byte-identical across runs without timing") {
  const std::vector<std::string> args{"sweep", "--p-max", "7", "--assume-mumford", "--format",
                                      "json", "--no-timing"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  auto seq = args;
  seq.push_back("--sequential");
  CHECK(invoke(seq).out == a.out);
}

TEST_CASE("--out writes the json report") {
  const std::string path = "frobrr_test_out.json";
  std::remove(path.c_str());
  const auto r = invoke({"verify-cube", "--out", path, "--no-timing"});
  CHECK(r.code == kExitPass);
  std::ifstream in(path);
  REQUIRE(in.good());
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["reports"][0]["identity"] == "cube_identity");
  CHECK(doc["reports"][0]["lhs"] == doc["reports"][0]["rhs"]);
  in.close();
  std::remove(path.c_str());
  CHECK(invoke({"verify-cube", "--out", "/nonexistent-dir/x.json"}).code == kExitUsage);
}

TEST_CASE("options may follow the subcommand") {
  const auto r = invoke({"verify-cube", "--format", "json", "--no-timing"});
  CHECK(r.code == kExitPass);
  CHECK(nlohmann::json::parse(r.out)["reports"][0]["elapsed_ms"] == 0.0);
  const auto before = invoke({"--format", "json", "verify-cube"});
  CHECK(before.code == kExitPass);
}
