#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ppwb/dimer.hpp"
#include "ppwb/error.hpp"
#include "ppwb/qseries.hpp"

using namespace ppwb;

TEST_CASE("grid graphs") {
  CHECK(kasteleyn_count(grid_graph(2, 3)) == 3);
  CHECK(kasteleyn_count(grid_graph(4, 4)) == 36);
  CHECK(kasteleyn_count(grid_graph(2, 8)) == 34);
  CHECK(enumerate_matchings(grid_graph(4, 4)).size() == 36);
}

TEST_CASE("hexagon graph shape") {
  const HexGraph hg = build_hex_graph(BoxDims(1, 1, 1));
  CHECK(hg.graph.whites == 3);
  CHECK(hg.graph.blacks == 3);
  CHECK(hg.graph.edges.size() == 6);
  for (int len : bounded_face_lengths(build_hex_graph(BoxDims(2, 3, 2)).graph)) CHECK(len == 6);
}

TEST_CASE("Kasteleyn counts match the product formula") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        const BoxDims box(a, b, c);
        CHECK(kasteleyn_count(build_hex_graph(box).graph) == box_count(box));
      }
  CHECK(kasteleyn_count(build_hex_graph(BoxDims(2, 3, 4)).graph) == 490);
}

TEST_CASE("tilings and plane partitions") {
  const BoxDims box(2, 2, 2);
  const HexGraph hg = build_hex_graph(box);
  int n = 0;
  for_each_in_box(box, [&](const PlanePartition& pp) {
    const HexTiling t = pp_to_tiling(pp, box);
    CHECK(t.lozenges.size() == 12);
    CHECK(tiles_hexagon(t));
    CHECK(tiling_to_pp(t) == pp);
    CHECK(matching_to_tiling(tiling_to_matching(t, hg), hg, box) == t);
    CHECK(parse_tiling(format_tiling(t), box) == t);
    ++n;
  });
  CHECK(n == 20);
}

TEST_CASE("worked example tiling") {
  std::ifstream f(PPWB_TEST_DATA "/pp24_box345.tiling");
  REQUIRE(f);
  std::stringstream s;
  s << f.rdbuf();
  const BoxDims box(3, 4, 5);
  const HexTiling t = parse_tiling(s.str(), box);
  CHECK(tiles_hexagon(t));
  CHECK(tiling_to_pp(t) == PlanePartition({{5, 3, 3, 2}, {5, 1, 1}, {3, 1}}));
}

TEST_CASE("malformed tilings") {
  CHECK_THROWS_AS(parse_tiling("0 0 Q\n", BoxDims(1, 1, 1)), ParseError);
  HexTiling t = pp_to_tiling(PlanePartition(), BoxDims(1, 1, 1));
  t.lozenges.erase(t.lozenges.begin());
  CHECK_FALSE(tiles_hexagon(t));
  CHECK_THROWS(tiling_to_pp(t));
}

TEST_CASE("single edge") {
  PlanarBipartiteGraph g;
  g.whites = 1;
  g.blacks = 1;
  g.vertices = {{0, 0}, {1, 0}};
  g.edges = {{0, 1}};
  CHECK(kasteleyn_count(g) == 1);
}

TEST_CASE("complete bipartite graph on 3+3 vertices is rejected") {
  PlanarBipartiteGraph g;
  g.whites = 3;
  g.blacks = 3;
  g.vertices = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
  for (int w = 0; w < 3; ++w)
    for (int b = 3; b < 6; ++b) g.edges.emplace_back(w, b);
  CHECK_THROWS_AS(kasteleyn_count(g), NotSignable);
  CHECK(enumerate_matchings(g).size() == 6);
}
