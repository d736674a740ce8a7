#include <doctest.h>

#include "ppwb/error.hpp"
#include "ppwb/schur.hpp"

using namespace ppwb;

TEST_CASE("tableau validation") {
  CHECK_NOTHROW(SemistandardTableau(Partition({2, 1}), {{1, 1}, {2}}));
  CHECK_THROWS(SemistandardTableau(Partition({2, 1}), {{1, 1}, {1}}));
  CHECK_THROWS(SemistandardTableau(Partition({2, 1}), {{2, 1}, {3}}));
}

TEST_CASE("tableau counts") {
  CHECK(count_ssyt(Partition({2, 1}), 3) == 8);
  CHECK(count_ssyt(Partition({2, 2}), 3) == 6);
  CHECK(weyl_dimension(Partition({2, 1}), 3) == 8);
  CHECK(weyl_dimension(Partition({3, 3}), 4) == count_ssyt(Partition({3, 3}), 4));
  CHECK(count_ssyt(Partition({1, 1, 1}), 2) == 0);
}

TEST_CASE("bialternant matches the tableau sum") {
  CHECK(schur_principal_bialternant(Partition({1}), 2).to_string() == "q + q^2");
  CHECK(schur_principal_bialternant(Partition({2, 1}), 2).to_string() == "q^4 + q^5");
  for (int n = 1; n <= 4; ++n)
    for (const auto& shape : {Partition({1}), Partition({2}), Partition({1, 1}), Partition({3, 2}),
                              Partition({2, 2, 1}), Partition({3, 3, 3})}) {
      if (shape.length() > n) continue;
      CHECK(schur_principal_bialternant(shape, n) == schur_sum(shape, n).principal_specialization());
    }
  CHECK_THROWS_AS(schur_principal_bialternant(Partition({1, 1, 1}), 2), InvalidArgument);
}

TEST_CASE("rectangular Schur functions give the box generating function") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) CHECK(verify_mmschur(BoxDims(a, b, c)));
}

TEST_CASE("plane partitions to tableaux") {
  const BoxDims box(3, 4, 5);
  const PlanePartition pp({{5, 3, 3, 2}, {5, 1, 1}, {3, 1}});
  const SemistandardTableau t = pp_box_to_ssyt(pp, box);
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 1, 2, 4}, {2, 3, 3, 7}, {5, 6, 6, 8}});
  CHECK(ssyt_to_pp_box(t, box) == pp);
  CHECK_THROWS(pp_box_to_ssyt(pp, BoxDims(3, 4, 4)));
  int n = 0;
  for_each_ssyt(Partition({2, 2}), 4, [&](const SemistandardTableau& s) {
    CHECK(pp_box_to_ssyt(ssyt_to_pp_box(s, BoxDims(2, 2, 2)), BoxDims(2, 2, 2)) == s);
    ++n;
  });
  CHECK(n == 20);
}

TEST_CASE("self-complementary shapes") {
  CHECK(sc_shapes(1, 1).size() == 2);
  CHECK(sc_shapes(1, 2).size() == 3);
  for (int a1 = 1; a1 <= 2; ++a1)
    for (int b1 = 1; b1 <= 2; ++b1) {
      for (int m = 1; m <= 4; ++m) CHECK(verify_s2(a1, b1, m));
      for (int c1 = 1; c1 <= 2; ++c1) CHECK(verify_sc_sum(a1, b1, c1).ok());
    }
  CHECK(verify_sc_sum(1, 1, 1).formula == 4);
}

TEST_CASE("tableau formatting") {
  CHECK(format_tableau(SemistandardTableau(Partition({2, 1}), {{1, 2}, {3}})) == "1 2\n3\n");
}
