#pragma once

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ppwb/bigint.hpp"
#include "ppwb/core.hpp"

namespace ppwb {

// Triangular grid: lattice point (p, r) sits at p*(1,0) + r*(1/2, sqrt(3)/2).
// The up triangle U(p,r) has corners (p,r), (p+1,r), (p,r+1); the down
// triangle D(p,r) has corners (p+1,r), (p,r+1), (p+1,r+1).
struct Triangle {
  int p = 0;
  int r = 0;
  bool up = true;
  auto operator<=>(const Triangle&) const = default;
};

// A lozenge is named by its up triangle and the side it extends across:
//   A: U(p,r) + D(p,r)      (a side face of the pile)
//   B: U(p,r) + D(p-1,r)    (a top face)
//   C: U(p,r) + D(p,r-1)    (the other side face)
enum class LozengeType { A, B, C };

struct Lozenge {
  int p = 0;
  int r = 0;
  LozengeType type = LozengeType::A;
  Triangle down() const;
  auto operator<=>(const Lozenge&) const = default;
};

char lozenge_char(LozengeType t);

struct HexTiling {
  BoxDims box;
  std::set<Lozenge> lozenges;
  bool operator==(const HexTiling&) const = default;
};

/// The unit triangles of the a,b,c,a,b,c hexagon.
std::set<Triangle> hexagon_region(const BoxDims& box);

/// Lozenges of the visible faces of the pile (walls at i = 0 and j = 0 have
/// height c). Throws InvalidArgument when pp does not fit the box.
HexTiling pp_to_tiling(const PlanePartition& pp, const BoxDims& box);
/// Inverse of pp_to_tiling; throws InvalidArgument for lozenge sets that do
/// not come from a plane partition in the box.
PlanePartition tiling_to_pp(const HexTiling& t);
/// Whether the lozenges cover the hexagon with no overlap.
bool tiles_hexagon(const HexTiling& t);

/// Bipartite graph with a straight-line planar embedding. White vertices are
/// 0..whites-1, black vertices are whites..whites+blacks-1.
struct PlanarBipartiteGraph {
  struct Vertex {
    double x = 0;
    double y = 0;
  };
  int whites = 0;
  int blacks = 0;
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // (white, black), global ids

  int vertex_count() const { return whites + blacks; }
};

/// Sorted edge indices of a perfect matching.
using Matching = std::vector<int>;

/// Centres of the up triangles (white) and down triangles (black) of the
/// hexagon, each in row-major order, joined across shared sides.
struct HexGraph {
  PlanarBipartiteGraph graph;
  std::vector<Triangle> triangles;  // by vertex id
  std::vector<Lozenge> edge_lozenges;  // by edge id
};
HexGraph build_hex_graph(const BoxDims& box);

/// Grid graph on rows x cols points, coloured by parity.
PlanarBipartiteGraph grid_graph(int rows, int cols);

/// Traces the faces of the embedding, solves for edge signs with product
/// (-1)^(len/2+1) around every bounded face, and returns |det| of the signed
/// white-by-black matrix. Throws NotSignable when the embedding is not
/// planar or the sign system is inconsistent.
BigInt kasteleyn_count(const PlanarBipartiteGraph& g);

/// Number of bounded faces and their lengths, from the same face tracing.
std::vector<int> bounded_face_lengths(const PlanarBipartiteGraph& g);

void for_each_matching(const PlanarBipartiteGraph& g, const std::function<void(const Matching&)>& visit);
std::vector<Matching> enumerate_matchings(const PlanarBipartiteGraph& g);

Matching tiling_to_matching(const HexTiling& t, const HexGraph& hg);
/// Throws InvalidArgument unless m is a perfect matching of hg.
HexTiling matching_to_tiling(const Matching& m, const HexGraph& hg, const BoxDims& box);

/// One lozenge per line, "p r T" with T in {A, B, C}, sorted.
std::string format_tiling(const HexTiling& t);
/// Throws ParseError naming the line on malformed input.
HexTiling parse_tiling(const std::string& text, const BoxDims& box);

}  // namespace ppwb
