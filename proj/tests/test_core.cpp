#include <doctest.h>

#include "ppwb/core.hpp"
#include "ppwb/error.hpp"
#include "ppwb/matrix.hpp"
#include "ppwb/mpoly.hpp"
#include "ppwb/qpoly.hpp"

using namespace ppwb;

TEST_CASE("plane partition basics") {
  const PlanePartition pp({{5, 3, 3, 2}, {5, 1, 1}, {3, 1}});
  CHECK(size(pp) == 24);
  CHECK(shape(pp) == Partition({4, 3, 2}));
  CHECK(trace(pp) == 6);
  CHECK(pp.fits(BoxDims(3, 4, 5)));
  CHECK_FALSE(pp.fits(BoxDims(3, 4, 4)));
  CHECK(pp == PlanePartition({{5, 3, 3, 2, 0}, {5, 1, 1, 0}, {3, 1}, {0}}));
}

TEST_CASE("plane partition validation") {
  CHECK_THROWS_AS(PlanePartition({{1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(PlanePartition({{1}, {2}}), InvalidArgument);
  CHECK_THROWS_AS(PlanePartition(std::vector<std::vector<int>>{{-1}}), InvalidArgument);
  CHECK_THROWS_AS(BoxDims(0, 1, 1), InvalidDims);
}

TEST_CASE("parse and format") {
  const auto pp = parse_plane_partition("5 3 3 2\n5 1 1 0\n3 1\n");
  CHECK(format_plane_partition(pp) == "5 3 3 2\n5 1 1\n3 1\n");
  CHECK_THROWS_AS(parse_plane_partition("1 x\n"), ParseError);
  try {
    parse_plane_partition("3 2\n1 4\n");
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(2,2)") != std::string::npos);
  }
}

TEST_CASE("partitions and Frobenius pairs") {
  CHECK(conjugate(Partition({4, 3, 2, 2})) == Partition({4, 4, 2, 1}));
  const auto f = frobenius_pair(Partition({4, 3, 2, 2}));
  CHECK(f.first == std::vector<int>{4, 2});
  CHECK(f.second == std::vector<int>{4, 3});
  CHECK(from_frobenius(f) == Partition({4, 3, 2, 2}));
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(10).size() == 42);
}

TEST_CASE("box enumeration") {
  CHECK(count_box(BoxDims(1, 1, 1)) == 2);
  CHECK(count_box(BoxDims(2, 2, 2)) == 20);
  CHECK(count_box(BoxDims(3, 3, 3)) == 980);
  CHECK(count_box(BoxDims(2, 3, 4)) == 490);
  CHECK(count_box(BoxDims(2, 2, 0)) == 1);
}

TEST_CASE("plane partitions by size") {
  // 1, 3, 6, 13, 24, 48
  std::vector<int> hist(6);
  for_each_up_to_size(5, [&](const PlanePartition& pp) { hist[size(pp)]++; });
  CHECK(hist == std::vector<int>{0, 1, 3, 6, 13, 24});
}

TEST_CASE("reverse plane partitions") {
  const ReversePlanePartition r(Partition({2, 1}), {{0, 1}, {2}});
  CHECK(r.size() == 3);
  CHECK(r.i_trace(0) == 0);
  CHECK_THROWS(ReversePlanePartition(Partition({2, 1}), {{1, 0}, {2}}));
}

TEST_CASE("q-polynomial arithmetic") {
  const QPolynomial a({1, 1});
  const QPolynomial b({1, -1, 1});
  CHECK((a * b).to_string() == "1 + q^3");
  CHECK((a * b).divided_exactly_by(a) == b);
  CHECK_THROWS_AS(b.divided_exactly_by(QPolynomial({1, 1, 1})), NonPolynomialQuotient);
  CHECK(QPolynomial({2, 0, -3}).to_string() == "2 - 3*q^2");
  CHECK(b.evaluate(2) == 3);
  CHECK(QPolynomial(1L).times_geometric(1, 4).to_string() == "1 + q + q^2 + q^3 + q^4");
}

TEST_CASE("multivariate polynomials") {
  auto x1 = MultivariatePolynomial::monomial({1, 0});
  auto x2 = MultivariatePolynomial::monomial({0, 1});
  auto p = (x1 + x2) * (x1 + x2);
  CHECK(p.coefficient({1, 1}) == 2);
  CHECK(p.principal_specialization().to_string() == "q^2 + 2*q^3 + q^4");
  CHECK(p.with_swapped(0, 1) == p);
  CHECK(p.at_all_ones() == 4);
}

TEST_CASE("Bareiss determinant") {
  Matrix<BigInt> m = {{2, 0, 1}, {1, 3, 2}, {1, 1, 2}};
  CHECK(bareiss_determinant(m) == 6);
  Matrix<BigInt> s = {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  CHECK(bareiss_determinant(s) == 0);
  Matrix<BigInt> z = {{0, 1}, {1, 0}};
  CHECK(bareiss_determinant(z) == -1);
}
