#include <doctest.h>

#include <json.hpp>
#include <set>

#include "ppwb/error.hpp"
#include "ppwb/gogmagog.hpp"

using namespace ppwb;

namespace {

const IntMatrix kAsm6 = {{0, 0, 1, 0, 0, 0},  {1, 0, -1, 1, 0, 0}, {0, 0, 1, -1, 0, 1},
                         {0, 1, -1, 1, 0, 0}, {0, 0, 1, -1, 1, 0}, {0, 0, 0, 1, 0, 0}};

}  // namespace

TEST_CASE("alternating sign matrices") {
  CHECK(validate_asm(kAsm6));
  CHECK_FALSE(validate_asm({{1, 0}, {1, 0}}));
  CHECK_FALSE(validate_asm({{0, 1, 0}, {1, -1, 1}, {0, 0, 0}}));
  std::vector<std::size_t> counts;
  for (int n = 1; n <= 5; ++n) counts.push_back(enumerate_asm(n).size());
  CHECK(counts == std::vector<std::size_t>{1, 2, 7, 42, 429});
}

TEST_CASE("monotone triangles") {
  const Triangle2D t = asm_to_mt(kAsm6);
  CHECK(t == Triangle2D{{1, 2, 3, 4, 5, 6}, {1, 2, 4, 5, 6}, {2, 3, 5, 6}, {2, 4, 5}, {3, 5}, {4}});
  CHECK(is_monotone_triangle(t));
  CHECK(mt_to_asm(t) == kAsm6);
  CHECK_FALSE(is_monotone_triangle({{1, 2}, {3}}));
  CHECK_THROWS_AS(asm_to_mt({{1, 1}, {0, 0}}), InvalidArgument);
  const Triangle2D id = asm_to_mt({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(id == Triangle2D{{1, 2, 3}, {2, 3}, {3}});
}

TEST_CASE("trapezoid parameters") {
  CHECK_THROWS_AS(check_params(0, 2, 3), InvalidParams);
  CHECK_THROWS_AS(check_params(-1, 2, 1), InvalidParams);
  CHECK_NOTHROW(check_params(0, 2, 2));
}

TEST_CASE("Gog and Magog totals") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) CHECK(count_magog(m, n, k) == count_gog(m, n, k));
  CHECK(count_gog(0, 4, 4) == 42);
  CHECK(count_magog(1, 2, 1) == 5);
}

TEST_CASE("Gog triangles correspond to monotone triangles") {
  // Full Gog triangles with m = 0 are monotone triangles read as columns.
  CHECK(count_gog(0, 5, 5) == 429);
}

TEST_CASE("statistics and overlap conventions") {
  std::multiset<std::pair<int, int>> got;
  for (const auto& g : enumerate_gog(1, 2, 1)) {
    const Stats s = gog_stats(g, OverlapConvention::Both);
    got.insert({s.maxima, s.minima});
  }
  CHECK(got == std::multiset<std::pair<int, int>>{{0, 2}, {0, 1}, {1, 1}, {1, 0}, {2, 0}});
  const MagogTrapezoid t{0, 1, 1, {{1}}};
  CHECK(magog_stats(t, OverlapConvention::Both).maxima == 1);
  CHECK(magog_stats(t, OverlapConvention::Both).minima == 1);
  CHECK(magog_stats(t, OverlapConvention::MaxOnly).minima == 0);
  CHECK(magog_stats(t, OverlapConvention::MinOnly).maxima == 0);
  CHECK(parse_overlap("max-only") == OverlapConvention::MaxOnly);
  CHECK_THROWS(parse_overlap("neither"));
}

TEST_CASE("refined tables") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) CHECK(conjecture_tables(m, n, k, OverlapConvention::Both).equal());
  const auto t = conjecture_tables(0, 3, 3, OverlapConvention::Both);
  CHECK(table_total(t.magog) == 7);
  CHECK(table_total(t.gog) == 7);
}

TEST_CASE("k = 1 closed form") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 5; ++n) {
      const auto t = conjecture_tables(m, n, 1, OverlapConvention::Both);
      for (int s = 0; s <= n + 1; ++s)
        for (int u = 0; u <= n + 1; ++u) {
          auto it = t.magog.find({s, u});
          const BigInt seen = it == t.magog.end() ? BigInt(0) : it->second;
          CHECK(seen == k1_count(m, n, s, u));
        }
    }
}

TEST_CASE("TSSCPP and Magog cardinalities") {
  for (int n = 1; n <= 3; ++n) CHECK(tsscpp_magog_check(n).ok());
  CHECK(tsscpp_magog_check(3).magog == 7);
}

TEST_CASE("JSON output") {
  const auto j = nlohmann::json::parse(conjecture_json(conjecture_tables(1, 2, 1, OverlapConvention::Both)));
  CHECK(j["equal"] == true);
  CHECK(j["params"]["n"] == 2);
  CHECK(j["magog"].size() == 5);
}

TEST_CASE("integer row parsing") {
  CHECK(parse_int_rows("1 0\n\n0 1\n") == IntMatrix{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(parse_int_rows("1 a\n"), ParseError);
  CHECK(format_matrix({{1, -1}, {0, 1}}) == "1 -1\n0 1\n");
}
