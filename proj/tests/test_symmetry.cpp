#include <doctest.h>

#include "ppwb/error.hpp"
#include "ppwb/qseries.hpp"
#include "ppwb/symmetry.hpp"

using namespace ppwb;

namespace {

bool in_class_by_filter_agrees(int cls, const BoxDims& box) {
  std::uint64_t filtered = 0;
  for_each_in_box(box, [&](const PlanePartition& pp) {
    if (is_in_class(pp, box, SymmetryClass(cls))) ++filtered;
  });
  return filtered == count_class(SymmetryClass(cls), box);
}

}  // namespace

TEST_CASE("cube operations") {
  const PlanePartition pp({{2, 1}, {1}});
  const CubeSet s = to_cubes(pp);
  CHECK(s.size() == 4);
  CHECK(from_cubes(s) == pp);
  CHECK(from_cubes(rotate(rotate(rotate(s)))) == pp);
  const BoxDims box(2, 2, 2);
  CHECK(complement(complement(s, box), box) == s);
  CHECK(from_cubes(complement(s, box)) == PlanePartition({{2, 1}, {1}}));
  CHECK(reflect(PlanePartition({{3, 1}})) == PlanePartition({{3}, {1}}));
}

TEST_CASE("class membership") {
  const BoxDims cube(2, 2, 2);
  CHECK(is_in_class(PlanePartition({{2, 1}, {1}}), cube, SymmetryClass(4)));
  CHECK_FALSE(is_in_class(PlanePartition({{2, 1}}), cube, SymmetryClass(2)));
  CHECK(is_in_class(PlanePartition({{2, 1}, {1}}), cube, SymmetryClass(5)));
  CHECK_FALSE(SymmetryClass(2).admits(BoxDims(2, 3, 1)));
  CHECK_THROWS(SymmetryClass(11));
}

TEST_CASE("constrained search agrees with filtered enumeration") {
  for (int cls = 1; cls <= 10; ++cls)
    for (int a = 1; a <= 3; ++a)
      for (int c = 1; c <= 3; ++c) {
        CAPTURE(cls);
        CAPTURE(a);
        CAPTURE(c);
        CHECK(in_class_by_filter_agrees(cls, BoxDims(a, a, c)));
      }
  CHECK(in_class_by_filter_agrees(5, BoxDims(2, 3, 2)));
}

TEST_CASE("class counts on small cubes") {
  // 2-cube: all, symmetric, cyclic, totally symmetric, ...
  const BoxDims cube(2, 2, 2);
  CHECK(count_class(SymmetryClass(1), cube) == 20);
  CHECK(count_class(SymmetryClass(2), cube) == 10);
  CHECK(count_class(SymmetryClass(3), cube) == 5);
  CHECK(count_class(SymmetryClass(4), cube) == 5);
  CHECK(count_class(SymmetryClass(5), cube) == 4);
  CHECK(count_class(SymmetryClass(10), cube) == 1);
  CHECK(count_class(SymmetryClass(10), BoxDims(6, 6, 6)) == 7);
}

TEST_CASE("box formula") {
  CHECK(box_count(BoxDims(2, 2, 2)) == 20);
  CHECK(box_count(BoxDims(2, 3, 4)) == 490);
  CHECK(box_gf(BoxDims(1, 1, 2)).to_string() == "1 + q + q^2");
  CHECK(box_gf(BoxDims(2, 2, 1)).to_string() == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK(all_pp_series(6).to_string() == "1 + q + 3*q^2 + 6*q^3 + 13*q^4 + 24*q^5 + 48*q^6");
}

TEST_CASE("symmetric class generating functions") {
  CHECK(class_gf_formula(SymmetryClass(2), BoxDims(1, 1, 1), Weight::Size).to_string() == "1 + q");
  for (int a = 1; a <= 3; ++a)
    for (int c = 1; c <= 3; ++c) {
      const BoxDims box(a, a, c);
      CHECK(class_gf_formula(SymmetryClass(2), box, Weight::Size) == class_gf(SymmetryClass(2), box, Weight::Size));
      CHECK(class_gf_formula(SymmetryClass(2), box, Weight::HalfSize) ==
            class_gf(SymmetryClass(2), box, Weight::HalfSize));
    }
  for (int a = 1; a <= 3; ++a) {
    const BoxDims box(a, a, a);
    CHECK(class_gf_formula(SymmetryClass(3), box, Weight::Size) == class_gf(SymmetryClass(3), box, Weight::Size));
    CHECK(class_gf_formula(SymmetryClass(4), box, Weight::Orbit) == class_gf(SymmetryClass(4), box, Weight::Orbit));
  }
  CHECK_THROWS_AS(class_gf_formula(SymmetryClass(3), BoxDims(2, 2, 2), Weight::HalfSize), InvalidArgument);
  CHECK_THROWS_AS(class_gf_formula(SymmetryClass(3), BoxDims(2, 2, 3), Weight::Size), InvalidDims);
}

TEST_CASE("class count formulas") {
  CHECK(class_count_formula(SymmetryClass(10), BoxDims(6, 6, 6)) == 7);
  CHECK(class_count_formula(SymmetryClass(5), BoxDims(2, 2, 2)) == 4);
  CHECK(class_count_formula(SymmetryClass(5), BoxDims(1, 1, 2)) == 1);
  CHECK(tsscpp_count(4) == 42);
  CHECK(cstc_count(1) == 1);
  CHECK(cstc_count(2) == 2);
  CHECK(cstc_count(3) == 11);
  CHECK_THROWS_AS(class_count_formula(SymmetryClass(5), BoxDims(1, 1, 1)), InvalidDims);
  for (int a = 1; a <= 4; ++a) CHECK(verify_c9c10(a));
  for (int a = 1; a <= 4; ++a)
    for (int c = 2; c <= 4; c += 2) {
      const BoxDims box(a, a, c);
      CHECK(class_count_formula(SymmetryClass(7), box) == count_class(SymmetryClass(7), box));
      CHECK(class_count_formula(SymmetryClass(6), box) == count_class(SymmetryClass(6), box));
    }
}

TEST_CASE("weights") {
  const PlanePartition pp({{2, 1}, {1}});
  CHECK(weight_of(pp, Weight::Size) == 4);
  CHECK(weight_of(pp, Weight::HalfSize) == 3);
  CHECK(weight_of(pp, Weight::Orbit) == 2);
  CHECK(parse_weight("half") == Weight::HalfSize);
  CHECK_THROWS(parse_weight("heavy"));
}
