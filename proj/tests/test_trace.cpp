#include <doctest.h>

#include <set>

#include "ppwb/qseries.hpp"
#include "ppwb/trace.hpp"

using namespace ppwb;

namespace {

const PlanePartition kPP0({{4, 3, 2, 2}, {4, 3, 1, 1}, {2, 2, 1, 1}, {1, 1}, {1, 1}});

}  // namespace

TEST_CASE("row conjugation") {
  const RaggedArray r = row_conjugate(kPP0);
  CHECK(r == RaggedArray{{4, 4, 2, 1}, {4, 2, 2, 1}, {4, 2}, {2}, {2}});
  CHECK(row_unconjugate(r) == kPP0);
}

TEST_CASE("Frobenius split of the columns") {
  const ColumnStrictPair p = frobenius_split(row_conjugate(kPP0));
  CHECK(p.first == PlanePartition({{4, 4, 2, 1}, {3, 1, 1}, {2}}));
  CHECK(p.second == PlanePartition({{5, 3, 2, 2}, {4, 2, 1}, {1}}));
  CHECK(is_valid_pair(p));
  CHECK(is_column_strict(p.first));
  CHECK_FALSE(is_column_strict(kPP0));
  CHECK(frobenius_merge(p) == row_conjugate(kPP0));
}

TEST_CASE("Stanley map statistics") {
  const WeightMatrix m = stanley_map(kPP0);
  CHECK(matrix_total(m) == trace(kPP0));
  CHECK(matrix_total(m) == 8);
  CHECK(matrix_weight(m) == size(kPP0));
  CHECK(matrix_weight(m) == 30);
  CHECK(stanley_unmap(m) == kPP0);
}

TEST_CASE("Knuth correspondence is a bijection on small inputs") {
  std::set<WeightMatrix> seen;
  int n = 0;
  for_each_up_to_size(6, [&](const PlanePartition& pp) {
    const ColumnStrictPair p = frobenius_split(row_conjugate(pp));
    const WeightMatrix m = knuth_map(p);
    CHECK(knuth_unmap(m) == p);
    seen.insert(m);
    ++n;
  });
  CHECK(seen.size() == static_cast<std::size_t>(n));
}

TEST_CASE("trace generating function") {
  const auto prod = trace_gf_product(6);
  CHECK(prod == trace_gf_bruteforce(6));
  CHECK(prod.at_t_one() == all_pp_series(6));
  CHECK(prod.coefficient(1, 2) == 2);
  CHECK(prod.coefficient(2, 2) == 1);
}

TEST_CASE("Gansner hook product") {
  for (const auto& shape : {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1}), Partition({2, 2})})
    CHECK(gansner_check(shape, 5).ok());
}

TEST_CASE("reverse plane partitions of a shape") {
  int n = 0;
  for_each_rpp(Partition({1, 1}), 2, [&](const ReversePlanePartition&) { ++n; });
  // 00, 01, 02, 11
  CHECK(n == 4);
}
