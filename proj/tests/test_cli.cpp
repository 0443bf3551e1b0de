#include <doctest.h>

#include <json.hpp>

#include "test_util.hpp"

using nlohmann::json;
using pinj::testing::run_cli;

namespace {

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("decompose emits the profile as JSON") {
  const auto res =
      run_cli("decompose --n 10 --chart \"(1,7,2,4)[3,5,10][9,6][8]\"");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j.at("rank") == 7);
  CHECK(j.at("defect") == 3);
  CHECK(j.at("stable_rank") == 4);
  CHECK(j.at("is_nilpotent") == false);
  CHECK(j.at("chart") == "(1,7,2,4)[3,5,10][9,6][8]");
  CHECK(j.at("map")[5].is_null());
}

TEST_CASE("decompose accepts pair lists") {
  const auto res = run_cli("decompose --n 2 --pairs \"[[1,2]]\"");
  REQUIRE(res.exit_code == 0);
  CHECK(json::parse(res.output).at("chart") == "[1,2]");
}

TEST_CASE("count prints a bare field value") {
  const auto res = run_cli("count --n 3 --field card_is");
  CHECK(res.exit_code == 0);
  CHECK(trimmed(res.output) == "34");

  const auto all = run_cli("count --n 3 --format json");
  const json j = json::parse(all.output);
  CHECK(j.at("card_is") == "34");
  CHECK(j.at("card_t") == "13");
  CHECK(j.at("lah") == json::array({"6", "6", "1"}));
  CHECK(j.at("b") == json({{"num", "17"}, {"den", "3"}}));
}

TEST_CASE("verify reports per-identity lines and exits zero") {
  const auto res = run_cli("verify --n 5 --all");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("PASS") != std::string::npos);
  CHECK(res.output.find("FAIL") == std::string::npos);
  CHECK(res.output.find("all identities hold") != std::string::npos);

  const auto one = run_cli("verify --n 5 --identity idempotent_count");
  CHECK(one.exit_code == 0);
  CHECK(one.output.find("idempotent_count") != std::string::npos);

  const auto spectral = run_cli("verify --n 6 --field spectral");
  CHECK(spectral.exit_code == 0);

  const auto products = run_cli("verify --n 3 --field products --k 3");
  CHECK(products.exit_code == 0);
}

TEST_CASE("verify emits machine-readable JSON") {
  const auto res = run_cli("verify --n 4 --all --format json");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("used_enumeration") == true);
  CHECK(j.at("checks").is_array());
  CHECK(!j.at("checks").empty());
}

TEST_CASE("compose multiplies left to right") {
  const auto res =
      run_cli("compose --n 2 --chart \"[1,2]\" --chart \"[2,1]\"");
  CHECK(res.exit_code == 0);
  CHECK(trimmed(res.output) == "(1)[2]");
}

TEST_CASE("bijection sweeps exit zero") {
  const auto res = run_cli("bijection --n 3 --all");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("FAIL") == std::string::npos);

  const auto one = run_cli("bijection --n 3 --identity cycle_chain");
  CHECK(one.exit_code == 0);
}

TEST_CASE("distribution output round-trips through a JSON parser") {
  const auto res = run_cli("distribution --n 1 --k 2");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.output);
  CHECK(j.at("p")[0] == json({{"num", "3"}, {"den", "4"}}));

  const auto brute = run_cli("distribution --n 2 --k 3 --field brute");
  const auto exact = run_cli("distribution --n 2 --k 3");
  CHECK(json::parse(brute.output) == json::parse(exact.output));

  const auto csv = run_cli("distribution --n 1 --k 2 --format csv");
  CHECK(csv.output.find("rank,num,den") == 0);
}

TEST_CASE("simulate is reproducible for a fixed seed") {
  const std::string args = "simulate --n 2 --k 2 --trials 5000 --seed 99";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  const json j = json::parse(a.output);
  CHECK(j.at("seed") == 99);
  CHECK(j.at("trials") == 5000);
  std::uint64_t total = 0;
  for (const auto& h : j.at("rank_histogram")) total += h.get<std::uint64_t>();
  CHECK(total == 5000);
}

TEST_CASE("simulate derives and reports a seed when none is given") {
  const auto res = run_cli("simulate --n 1 --k 2 --trials 10", true);
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("seed") != std::string::npos);
}

TEST_CASE("asymptotics reports") {
  const auto growth = run_cli("asymptotics --n 10");
  REQUIRE(growth.exit_code == 0);
  const json j = json::parse(growth.output);
  CHECK(j.at("all_ok") == true);
  CHECK(j.at("rows").size() == 9);

  const auto csv = run_cli("asymptotics --n 6 --format csv");
  CHECK(csv.output.find("n,t_ratio") == 0);

  const auto mod = run_cli("asymptotics --n 3 --field mod --m 2");
  const json jm = json::parse(mod.output);
  CHECK(jm.at("f") == json::array({"19", "15"}));

  const auto uni = run_cli("asymptotics --n 8 --field unimodality");
  const json ju = json::parse(uni.output);
  CHECK(ju.at("lah_peak") == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("count").exit_code == 2);
  CHECK(run_cli("nonsense --n 3").exit_code == 2);
  CHECK(run_cli("decompose --n 2 --chart \"(1,2](3)\"").exit_code == 2);
  CHECK(run_cli("decompose --n 2").exit_code == 2);
  CHECK(run_cli("count --n 3 --field no_such_field").exit_code == 2);
  CHECK(run_cli("distribution --n 9 --k 9 --field brute --budget 100").exit_code ==
        2);
}

TEST_CASE("budget errors surface the exact requirement") {
  const auto res =
      run_cli("distribution --n 3 --k 9 --field brute --budget 100", true);
  CHECK(res.exit_code == 2);
  // 34^9
  CHECK(res.output.find("60716992766464") != std::string::npos);
}

TEST_CASE("budget flag and environment variable control enumeration") {
  const auto res = run_cli("verify --n 4 --all --format json");
  const json full = json::parse(res.output);
  CHECK(full.at("used_enumeration") == true);

  // a tiny budget forces the closed-form-only path
  const auto limited = run_cli("verify --n 4 --all --budget 10 --format json");
  const json j = json::parse(limited.output);
  CHECK(j.at("used_enumeration") == false);
  CHECK(j.at("all_pass") == true);

  // PINJ_BUDGET has the same effect; the flag wins over the variable
  const auto via_env =
      pinj::testing::run_cli_env("PINJ_BUDGET=10", "verify --n 4 --all --format json");
  CHECK(json::parse(via_env.output).at("used_enumeration") == false);
  const auto flag_wins = pinj::testing::run_cli_env(
      "PINJ_BUDGET=10", "verify --n 4 --all --budget 1000000 --format json");
  CHECK(json::parse(flag_wins.output).at("used_enumeration") == true);
}
