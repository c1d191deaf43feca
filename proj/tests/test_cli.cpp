#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "takagi/cli.hpp"
#include "takagi/scan.hpp"

using takagi::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) {
    if (value) {
      setenv(takagi::cli::kTermsEnvVar, value, 1);
    } else {
      unsetenv(takagi::cli::kTermsEnvVar);
    }
  }
  ~EnvGuard() { unsetenv(takagi::cli::kTermsEnvVar); }
};

}  // namespace

TEST_CASE("eval") {
  EnvGuard env(nullptr);
  const auto exact = call({"eval", "1/3", "--exact"});
  REQUIRE(exact.code == 0);
  const Json j = exact.json();
  CHECK(j["input"] == "1/3");
  CHECK(j["command"] == "eval");
  CHECK(j["exact"] == true);
  CHECK(j["payload"]["value"] == "2/3");
  CHECK(j["payload"]["decimal"] == "0.66666666666666666667");

  const Json cert = call({"eval", "1/3", "--terms", "4", "--digits", "6"}).json();
  CHECK(cert["exact"] == false);
  CHECK(cert["payload"]["value"] == "5/8");
  CHECK(cert["payload"]["error_bound"] == "1/16");
  CHECK(cert["payload"]["terms"] == 4);
  CHECK(cert["payload"]["decimal"] == "0.625000");

  CHECK(call({"eval", "1/3"}).json()["payload"]["terms"] == 64);
  CHECK(call({"eval", "-1/3", "--exact"}).json()["payload"]["value"] == "2/3");
  CHECK(call({"eval", "0.(01)", "--exact"}).json()["payload"]["value"] == "2/3");
}

TEST_CASE("default term count from the environment") {
  {
    EnvGuard env("10");
    CHECK(call({"eval", "1/5"}).json()["payload"]["terms"] == 10);
    CHECK(call({"eval", "1/5", "--terms", "3"}).json()["payload"]["terms"] == 3);
  }
  {
    EnvGuard env("ten");
    CHECK(call({"eval", "1/5"}).code == takagi::cli::kExitParse);
  }
  {
    EnvGuard env("0");
    CHECK(call({"eval", "1/5"}).code == takagi::cli::kExitDomain);
  }
}

TEST_CASE("classify") {
  const Json third = call({"classify", "1/3"}).json()["payload"];
  CHECK(third["expansion"] == "0.(01)");
  CHECK(third["case"] == "TailAlternating");
  CHECK(third["witness_m"] == 1);
  CHECK(third["c_x"] == 0);
  CHECK(third["superdiff"] == "[0,1]");
  CHECK(third["subdiff"] == "empty");
  CHECK(third["local_max"] == true);

  CHECK(call({"classify", "2/3"}).json()["payload"]["superdiff"] == "[-1,0]");
  CHECK(call({"classify", "2/5"}).json()["payload"]["superdiff"] == "{0}");
  const Json fifth = call({"classify", "1/5"}).json()["payload"];
  CHECK(fifth["case"] == "PairSumming");
  CHECK(fifth["witness_m"] == 2);
  CHECK(fifth["superdiff"] == "{1}");

  const Json ninth = call({"classify", "1/9"}).json()["payload"];
  CHECK(ninth["case"] == "Irregular");
  CHECK(ninth["witness_m"].is_null());
  CHECK(ninth["slope_liminf"] == "0");
  CHECK(ninth["slope_limsup"] == "3");

  const Json half = call({"classify", "1/2"}).json()["payload"];
  CHECK(half["case"] == "Dyadic");
  CHECK(half["superdiff"] == "empty");
  CHECK(half["subdiff"] == "R");

  CHECK(call({"classify", "-1/3"}).json()["payload"]["superdiff"] == "[-1,0]");
}

TEST_CASE("dini") {
  const Json third = call({"dini", "1/3", "--depth", "12", "--digits", "3"}).json()["payload"];
  CHECK(third["d_minus_est"] == "1.000");
  CHECK(third["D_plus_est"] == "0.000");
  CHECK(third["divergent_up"] == false);
  REQUIRE(third["mirror"].size() == 10);
  for (const auto& row : third["mirror"]) {
    CHECK(row["quotient"] == std::to_string(row["predicted"].get<long long>()));
  }
  const Json half = call({"dini", "1/2", "--depth", "16"}).json()["payload"];
  CHECK(half["divergent_up"] == true);
  CHECK(half["divergent_down"] == true);
  CHECK(half.contains("dyadic"));
  CHECK(call({"dini", "1/3", "--depth", "2"}).code == takagi::cli::kExitDomain);
  const Json serial = call({"dini", "1/3", "--serial", "--depth", "12", "--digits", "3"}).json()["payload"];
  CHECK(serial == third);
}

TEST_CASE("maxset") {
  const Json p = call({"maxset", "11/12"}).json()["payload"];
  CHECK(p["in_M"] == false);
  CHECK(p["max_value"] == false);
  CHECK(p["in_A"] == 3);
  CHECK(p["a_identity"]["m"] == 3);
  CHECK(p["a_identity"]["k"] == "3");
  CHECK(p["in_script_A"]["m"] == 3);

  const Json q = call({"maxset", "2/5"}).json()["payload"];
  CHECK(q["in_M"] == true);
  CHECK(q["max_value"] == true);
  CHECK(q["in_A"].is_null());
  CHECK(q["a_identity"].is_null());
  CHECK(q["in_script_A"]["scaled_point"] == "2/5");

  CHECK(call({"maxset", "1/9"}).json()["payload"]["in_script_A"].is_null());
}

TEST_CASE("scan csv") {
  const auto r = call({"scan", "--from", "0", "--to", "1", "--step", "1/3"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == takagi::kScanCsvHeader);
  CHECK(rows[0] == "x,t_exact,t_decimal,case,superdiff");
  CHECK(rows[1].starts_with("0,0,"));
  CHECK(rows[2] == "1/3,2/3,0.66666666666666666667,TailAlternating,\"[0,1]\"");
  CHECK(rows[3].starts_with("2/3,2/3,"));
  CHECK(rows[4].starts_with("1,0,"));

  const auto fine = call({"scan", "--from", "0", "--to", "1", "--step", "1/64", "--digits", "4"});
  const auto fine_rows = lines(fine.out);
  REQUIRE(fine_rows.size() == 66);
  for (std::size_t i = 1; i < fine_rows.size(); ++i) {
    const std::string decimal = fine_rows[i].substr(fine_rows[i].find(',', fine_rows[i].find(',') + 1) + 1, 6);
    CHECK(std::stod(decimal) <= 2.0 / 3.0);
    CHECK(fine_rows[i].find("Dyadic") != std::string::npos);
  }
}

TEST_CASE("scan jsonl and file output") {
  const auto r = call({"scan", "--from", "0", "--to", "1", "--step", "1/3", "--format", "jsonl"});
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  const Json second = Json::parse(rows[1]);
  CHECK(second["x"] == "1/3");
  CHECK(second["t_exact"] == "2/3");
  CHECK(second["superdiff"] == "[0,1]");

  const auto path = std::filesystem::temp_directory_path() / "takagi_scan_test.csv";
  REQUIRE(call({"scan", "--from", "0", "--to", "1/2", "--step", "1/4", "--out", path.string()}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(lines(buf.str()).size() == 4);
  std::filesystem::remove(path);

  CHECK(call({"scan", "--from", "0", "--to", "1", "--step", "1/3", "--out", "/nonexistent/dir/x.csv"}).code ==
        takagi::cli::kExitIo);
}

TEST_CASE("exit codes") {
  CHECK(call({"scan", "--from", "0", "--to", "1", "--step", "0"}).code == takagi::cli::kExitDomain);
  CHECK(call({"scan", "--from", "1", "--to", "0", "--step", "1/4"}).code == takagi::cli::kExitDomain);
  CHECK(call({"eval", "1/0"}).code == takagi::cli::kExitDomain);
  CHECK(call({"eval", "abc"}).code == takagi::cli::kExitParse);
  CHECK(call({"classify", "0.1(2)"}).code == takagi::cli::kExitParse);
  CHECK(call({"bogus"}).code == takagi::cli::kExitParse);
  CHECK(call({}).code == takagi::cli::kExitParse);
  CHECK(call({"eval", "1/3", "--terms", "0"}).code == takagi::cli::kExitParse);
  CHECK(call({"scan", "--from", "0", "--to", "1", "--step", "1/2", "--format", "xml"}).code ==
        takagi::cli::kExitParse);
  const auto err = call({"eval", "3/z1"});
  CHECK(err.err.find("z1") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}
