// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cli_runner.hpp"
#include "ppwb/verify.hpp"

using namespace ppwb;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;
};

Outcome from_checks(const std::vector<Check>& checks) {
  Outcome o;
  std::size_t info = 0;
  for (const auto& c : checks) {
    if (c.status == "info") {
      ++info;
      std::cout << "    info " << c.id << ": expected " << c.expected << ", observed " << c.actual << '\n';
      continue;
    }
    ++o.checks;
    if (c.status == "fail" && o.pass) {
      o.pass = false;
      o.detail = c.id + " expected " + c.expected + " got " + c.actual;
    }
  }
  if (info) o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(info) + " informational";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void expect(Outcome& o, bool ok, const std::string& what) {
  ++o.checks;
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

Outcome cli_criterion() {
  Outcome o;
  expect(o, run_cli("verify --suite all").exit_code == 0, "verify --suite all did not exit 0");
  for (const auto& suite : suite_names()) {
    const auto r = run_cli("verify --suite " + suite + " --json");
    bool ok = r.exit_code == 0;
    try {
      const auto j = nlohmann::json::parse(r.out);
      ok = ok && j.at("suite") == suite && j.at("pass").is_boolean() && j.at("checks").is_array();
      for (const auto& c : j.at("checks"))
        for (const char* key : {"id", "status", "expected", "actual"}) ok = ok && c.at(key).is_string();
    } catch (const std::exception&) {
      ok = false;
    }
    expect(o, ok, "JSON report for suite " + suite + " does not match the schema");
  }
  struct Case {
    std::string args;
    std::string golden;
  };
  const std::vector<Case> cases = {
      {"bijection pp-tiling --input " + data_file("pp24.pp") + " --box 3,4,5 --roundtrip", "pp24_box345.tiling"},
      {"bijection pp-paths --input " + data_file("pp24.pp") + " --box 3,4,5 --roundtrip", ""},
      {"bijection pp-ssyt --input " + data_file("pp24_padded.pp") + " --box 3,4,6 --roundtrip", "pp24_box346.ssyt"},
      {"bijection asm-mt --input " + data_file("asm6.asm") + " --roundtrip", "asm6.mt"},
      {"bijection stanley --input " + data_file("pp30.pp") + " --roundtrip", ""},
  };
  for (const auto& c : cases) {
    const auto r = run_cli(c.args);
    bool ok = r.exit_code == 0 && r.out.find("roundtrip ok\n") != std::string::npos;
    if (!c.golden.empty()) ok = ok && r.out == slurp(data_file(c.golden)) + "roundtrip ok\n";
    expect(o, ok, "round trip failed: " + c.args);
  }
  const auto r = run_cli("bijection stanley --input " + data_file("pp30.pp"));
  expect(o, r.out.find("sum m = 8\n") != std::string::npos, "stanley map on the running example lost the trace");
  return o;
}

}  // namespace

int main() {
  bool all = true;
  for (int ac = 1; ac <= 12; ++ac) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = ac == 12 ? cli_criterion() : from_checks(criterion_checks(ac));
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char line[160];
    std::snprintf(line, sizeof line, "AC%-2d %s  %4zu checks  %7.2fs", ac, o.pass ? "PASS" : "FAIL", o.checks, secs);
    std::cout << line << (o.detail.empty() ? "" : "  " + o.detail) << '\n';
    all = all && o.pass;
  }
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << '\n';
  return all ? 0 : 1;
}
