#include <doctest.h>

#include "ppwb/error.hpp"
#include "ppwb/lgv.hpp"
#include "ppwb/qseries.hpp"

using namespace ppwb;

TEST_CASE("single path counts") {
  CHECK(path_count({0, 0}, {2, 2}) == 6);
  CHECK(path_count({0, 0}, {0, 0}) == 1);
  CHECK(path_count({1, 0}, {0, 3}) == 0);
}

TEST_CASE("determinant of path counts") {
  CHECK(lgv_determinant({{0, 0}}, {{3, 2}}) == 10);
  CHECK_THROWS_AS(lgv_determinant({{0, 0}}, {{1, 1}, {2, 2}}), DimensionMismatch);
  CHECK(box_det_count(BoxDims(2, 2, 2)) == 20);
  CHECK(box_det_count(BoxDims(2, 3, 4)) == 490);
}

TEST_CASE("paths agree with the product formula") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        const BoxDims box(a, b, c);
        CHECK(box_det_count(box) == box_count(box));
        CHECK(count_box_families(box) == box_count(box));
      }
}

TEST_CASE("plane partitions to path families and back") {
  const BoxDims box(3, 4, 5);
  const PlanePartition pp({{5, 3, 3, 2}, {5, 1, 1}, {3, 1}});
  const PathFamily f = pp_to_paths(pp, box);
  CHECK(f.paths.size() == 4);
  CHECK(f.is_nonintersecting());
  CHECK(paths_to_pp(f, box) == pp);
  CHECK(parse_path_family(format_path_family(f)) == f);
  for_each_in_box(BoxDims(2, 2, 3), [&](const PlanePartition& p) {
    CHECK(paths_to_pp(pp_to_paths(p, BoxDims(2, 2, 3)), BoxDims(2, 2, 3)) == p);
  });
}

TEST_CASE("path family text format") {
  const PathFamily f = parse_path_family("-1 1 RU\n-2 2 -\n");
  CHECK(f.paths[0].end() == LatticePoint{0, 2});
  CHECK(f.paths[1].steps.empty());
  CHECK_THROWS_AS(parse_path_family("0 0 RX\n"), ParseError);
}
