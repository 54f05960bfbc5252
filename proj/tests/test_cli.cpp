#include <doctest.h>

#include <json.hpp>
#include <string>

#include "test_util.hpp"

using nlohmann::ordered_json;
using testutil::cli_path;
using testutil::run_command;

TEST_CASE("region command emits the exact corner vertex as JSON") {
  const auto res = run_command(
      cli_path() + " region --m1 1 --n1 2 --m2 3 --n2 3 --channel fic --csit no");
  REQUIRE(res.exit_code == 0);
  const ordered_json j = ordered_json::parse(res.output);
  bool corner = false;
  for (const auto& v : j.at("vertices"))
    if (v.at(0) == "1" && v.at(1) == "3/2") corner = true;
  CHECK(corner);
  CHECK(j.at("vertices").size() == 4);

  // parsing then re-serializing is idempotent
  CHECK(ordered_json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("region command CSV output lists vertices") {
  const auto res = run_command(
      cli_path() +
      " region --m1 1 --n1 1 --m2 1 --n2 1 --channel zic --csit yes --format csv");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output == "d1,d2\n0,0\n1,0\n0,1\n");
}

TEST_CASE("region command rejects missing and out-of-range flags") {
  CHECK(run_command(cli_path() +
                    " region --n1 2 --m2 3 --n2 3 --channel fic --csit no")
            .exit_code == 2);
  CHECK(run_command(cli_path() +
                    " region --m1 0 --n1 2 --m2 3 --n2 3 --channel fic --csit no")
            .exit_code == 2);
  CHECK(run_command(cli_path() +
                    " region --m1 1 --n1 2 --m2 3 --n2 3 --channel fic "
                    "--csit no --bogus 1")
            .exit_code == 2);
}

TEST_CASE("scheme command verifies the special construction") {
  const auto res = run_command(
      cli_path() + " scheme --m1 1 --n1 2 --m2 3 --n2 3 --special");
  REQUIRE(res.exit_code == 0);
  const ordered_json j = ordered_json::parse(res.output);
  CHECK(j.at("pass") == true);
  CHECK(j.at("rank_u") == 2);
  CHECK(j.at("v_frobenius").get<double>() <= 1e-12);
  CHECK(j.at("mode") == "special");
  CHECK(j.contains("seed"));       // defaulted seeds are always printed
  CHECK(j.contains("rank_tol"));   // tolerances echoed for reproducibility
}

TEST_CASE("scheme command with random channels passes almost surely") {
  const auto res = run_command(
      cli_path() + " scheme --m1 2 --n1 3 --m2 4 --n2 4 --random --seed 7");
  REQUIRE(res.exit_code == 0);
  const ordered_json j = ordered_json::parse(res.output);
  CHECK(j.at("pass") == true);
  CHECK(j.at("seed") == 7);
  CHECK(j.at("rank_u") == 6);
}

TEST_CASE("scheme command reports the violated inequality at exit 2") {
  const auto res =
      run_command(cli_path() + " scheme --m1 2 --n1 2 --m2 3 --n2 3");
  CHECK(res.exit_code == 2);
}

TEST_CASE("scheme command exits 1 when verification fails") {
  // an absurd rank tolerance degrades rank_u below its requirement
  const auto res = run_command(
      cli_path() + " scheme --m1 1 --n1 2 --m2 3 --n2 3 --rank-tol 0.99");
  CHECK(res.exit_code == 1);
  const ordered_json j = ordered_json::parse(res.output);
  CHECK(j.at("pass") == false);
}

TEST_CASE("scheme command dumps matrices as CSV on request") {
  const std::string dir = "cli_dump_test";
  const auto res = run_command(cli_path() +
                               " scheme --m1 1 --n1 2 --m2 3 --n2 3 "
                               "--dump-dir " + dir);
  REQUIRE(res.exit_code == 0);
  const auto q = run_command("cat " + dir + "/q.csv");
  CHECK(q.output == "1,0,1,0\n");  // Q(1,2) = [1, 1] as re,im pairs
  const auto v = run_command("cat " + dir + "/v.csv");
  CHECK(!v.output.empty());
  run_command("rm -r " + dir);
}

TEST_CASE("simulate command recovers the open corner point slopes") {
  const auto res = run_command(
      cli_path() +
      " simulate --m1 1 --n1 2 --m2 3 --n2 3 --powers-db 60,80 --trials 20 --seed 1");
  REQUIRE(res.exit_code == 0);
  // last line is the JSON estimate, the rest is the CSV sweep
  const auto last_newline = res.output.rfind('\n', res.output.size() - 2);
  const std::string json_line = res.output.substr(last_newline + 1);
  const ordered_json j = ordered_json::parse(json_line);
  CHECK(std::abs(j.at("d1_hat").get<double>() - 1.0) < 0.1);
  CHECK(std::abs(j.at("d2_hat").get<double>() - 1.5) < 0.1);
  CHECK(j.at("seed") == 1);
  CHECK(res.output.rfind("power_db,r1_bits,r2_bits,trial\n", 0) == 0);
}

TEST_CASE("simulate command is byte-deterministic and validates powers") {
  const std::string cmd =
      cli_path() +
      " simulate --m1 1 --n1 2 --m2 3 --n2 3 --powers-db 60,80 --trials 5 --seed 3";
  const auto a = run_command(cmd);
  const auto b = run_command(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);

  CHECK(run_command(cli_path() +
                    " simulate --m1 1 --n1 2 --m2 3 --n2 3 --powers-db 60 "
                    "--trials 5 --seed 3")
            .exit_code == 2);
}

TEST_CASE("sweep command passes the property suite at max-antennas 4") {
  const auto res = run_command(cli_path() + " sweep --max-antennas 4");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("seed: 0") != std::string::npos);
  CHECK(res.output.find("lemma3: 160/160") != std::string::npos);
  CHECK(res.output.find("csit-dominance: 256/256") != std::string::npos);
  CHECK(res.output.find("zic-dominance: 256/256") != std::string::npos);
  CHECK(res.output.find("zf-feasibility: 160/160") != std::string::npos);

  const auto one = run_command(
      cli_path() + " sweep --max-antennas 3 --property lemma3");
  REQUIRE(one.exit_code == 0);
  CHECK(one.output.find("lemma3") != std::string::npos);
  CHECK(one.output.find("zf-feasibility") == std::string::npos);
}

TEST_CASE("sweep command rejects max-antennas outside 1..6") {
  CHECK(run_command(cli_path() + " sweep --max-antennas 0").exit_code == 2);
  CHECK(run_command(cli_path() + " sweep --max-antennas 7").exit_code == 2);
}
