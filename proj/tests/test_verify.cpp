#include <doctest.h>

#include <json.hpp>

#include "ppwb/error.hpp"
#include "ppwb/verify.hpp"

using namespace ppwb;

TEST_CASE("suite names") {
  CHECK(is_suite("all"));
  CHECK(is_suite("dimer"));
  CHECK_FALSE(is_suite("nope"));
  CHECK_THROWS_AS(run_suite("nope"), InvalidArgument);
}

TEST_CASE("report structure") {
  const VerifyReport r = run_suite("trace");
  CHECK(r.pass);
  CHECK_FALSE(r.checks.empty());
  for (std::size_t i = 1; i < r.checks.size(); ++i) CHECK(r.checks[i - 1].id <= r.checks[i].id);
  const auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["suite"] == "trace");
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == r.checks.size());
  CHECK(report_text(r).find("-> PASS") != std::string::npos);
}

TEST_CASE("a failing check fails the report text") {
  VerifyReport r;
  r.suite = "x";
  r.checks.push_back({"a", "fail", "1", "2"});
  r.pass = false;
  CHECK(report_text(r).find("FAIL a: expected 1, got 2") != std::string::npos);
}

TEST_CASE("criterion checks exist for every numbered criterion") {
  CHECK_THROWS(criterion_checks(0));
  CHECK_FALSE(criterion_checks(5).empty());
  CHECK_FALSE(criterion_checks(11).empty());
}
