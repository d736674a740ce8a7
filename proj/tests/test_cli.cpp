#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli_runner.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

bool valid_report(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("suite") || !j.contains("checks") || !j.contains("pass")) return false;
  if (!j["suite"].is_string() || !j["checks"].is_array() || !j["pass"].is_boolean()) return false;
  bool all = true;
  for (const auto& c : j["checks"]) {
    for (const char* key : {"id", "status", "expected", "actual"})
      if (!c.contains(key) || !c[key].is_string()) return false;
    if (c["status"] == "fail") all = false;
  }
  return all == j["pass"].get<bool>();
}

}  // namespace

TEST_CASE("count") {
  auto r = run_cli("count --class 1 --box 2,2,2 --method lgv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "20\n");
  CHECK(run_cli("count --class 10 --a 3 --method formula").out == "7\n");
  CHECK(run_cli("count --class 1 --box 1,1,1 --method brute").out == "2\n");
  CHECK(run_cli("count --class 1 --box 2,3,4 --method kasteleyn").out == "490\n");
  CHECK(run_cli("count --class 4 --a 3 --method brute").out == "16\n");
  CHECK(run_cli("count --class 1 --box 30,30,30").exit_code == 0);
}

TEST_CASE("count errors") {
  CHECK(run_cli("count --class 2 --box 2,2,2 --method lgv").exit_code == 2);
  CHECK(run_cli("count --class 3 --box 2,3,2").exit_code == 2);
  CHECK(run_cli("count --class 1 --box 2,x,2").exit_code == 2);
  CHECK(run_cli("count --class 11 --box 2,2,2").exit_code == 2);
  CHECK(run_cli("count --class 1 --box 3,4,5 --method brute").exit_code == 2);
  CHECK(run_cli("count --class 1 --box 3,4,5 --method warp").exit_code == 2);
}

TEST_CASE("size guard follows the environment") {
  CHECK(run_cli("count --class 1 --box 2,2,2 --method brute").exit_code == 0);
  CHECK(run_cli("count --class 1 --box 2,2,2 --method brute", "PPWB_MAX_CELLS=4").exit_code == 2);
  CHECK(run_cli("count --class 1 --box 3,4,5 --method brute", "PPWB_MAX_CELLS=60").out ==
        run_cli("count --class 1 --box 3,4,5").out);
  CHECK(run_cli("count --class 1 --box 2,2,2 --method brute", "PPWB_MAX_CELLS=zz").exit_code == 2);
}

TEST_CASE("generating functions") {
  CHECK(run_cli("gf --class 1 --box 1,1,2").out == "1 + q + q^2\n");
  CHECK(run_cli("gf --class 2 --a 1 --c 1 --weight size").out == "1 + q\n");
  CHECK(run_cli("gf --class 4 --a 2 --weight half --at-q 1").out == "5\n");
  CHECK(run_cli("gf --class 3 --a 2 --weight half").exit_code == 2);
  CHECK(run_cli("gf --class 5 --box 2,2,2").exit_code == 2);
  CHECK(run_cli("gf --class 2 --a 2 --c 2 --method brute").out == run_cli("gf --class 2 --a 2 --c 2").out);
}

TEST_CASE("verify") {
  CHECK(run_cli("verify --suite box").exit_code == 0);
  CHECK(run_cli("verify --suite nope").exit_code == 2);
  const auto r = run_cli("verify --suite gogmagog --json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(valid_report(j));
  CHECK(j["suite"] == "gogmagog");
  REQUIRE(j["tables"].is_array());
  for (const auto& t : j["tables"]) CHECK(t["equal"] == true);
  std::vector<std::string> ids;
  for (const auto& c : j["checks"]) ids.push_back(c["id"]);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("output is deterministic") {
  CHECK(run_cli("verify --suite dimer --json").out == run_cli("verify --suite dimer --json").out);
}

TEST_CASE("bijections on worked examples") {
  auto r = run_cli("bijection pp-ssyt --input " + data_file("pp24_padded.pp") + " --box 3,4,6 --roundtrip");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(data_file("pp24_box346.ssyt")) + "roundtrip ok\n");
  r = run_cli("bijection asm-mt --input " + data_file("asm6.asm") + " --roundtrip");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(data_file("asm6.mt")) + "roundtrip ok\n");
  r = run_cli("bijection pp-tiling --input " + data_file("pp24.pp") + " --box 3,4,5 --roundtrip");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(data_file("pp24_box345.tiling")) + "roundtrip ok\n");
  r = run_cli("bijection pp-paths --input " + data_file("pp24.pp") + " --box 3,4,5 --roundtrip");
  CHECK(r.exit_code == 0);
  r = run_cli("bijection stanley --input " + data_file("pp30.pp") + " --roundtrip");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("sum m = 8\n") != std::string::npos);
  CHECK(r.out.find("sum (i+j-1) m = 30\n") != std::string::npos);
}

TEST_CASE("bijection errors") {
  CHECK(run_cli("bijection pp-tiling --input " + data_file("bad.pp")).exit_code == 2);
  CHECK(run_cli("bijection pp-tiling --input " + data_file("pp24.pp") + " --box 2,2,2").exit_code == 2);
  CHECK(run_cli("bijection asm-mt --input " + data_file("pp24.pp")).exit_code == 2);
  CHECK(run_cli("bijection frobnicate --input " + data_file("pp24.pp")).exit_code == 2);
  CHECK(run_cli("bijection pp-ssyt --input /nonexistent/file").exit_code == 2);
}

TEST_CASE("conjecture") {
  auto r = run_cli("conjecture --m 0 --n 3 --k 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("EQUAL") != std::string::npos);
  CHECK(r.out.find("(total 7)") != std::string::npos);
  r = run_cli("conjecture --m 1 --n 2 --k 1 --json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["equal"] == true);
  CHECK(run_cli("conjecture --m 0 --n 2 --k 3").exit_code == 2);
  CHECK(run_cli("conjecture --m 0 --n 2 --k 1 --convention max-only").exit_code == 1);
}
