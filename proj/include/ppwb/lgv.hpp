#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ppwb/bigint.hpp"
#include "ppwb/core.hpp"

namespace ppwb {

struct LatticePoint {
  int x = 0;
  int y = 0;
  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
};

enum class Step { Right, Up };

/// Path with unit steps to the right or up.
struct LatticePath {
  LatticePoint start;
  std::vector<Step> steps;

  LatticePoint end() const;
  /// Every lattice point visited, start and end included.
  std::vector<LatticePoint> points() const;
  bool operator==(const LatticePath&) const = default;
};

struct PathFamily {
  std::vector<LatticePath> paths;

  /// No two paths share a lattice point.
  bool is_nonintersecting() const;
  bool operator==(const PathFamily&) const = default;
};

/// Number of paths from a to e.
BigInt path_count(const LatticePoint& a, const LatticePoint& e);

/// det(path_count(starts[j], ends[i])). Throws DimensionMismatch when the
/// sequences differ in length.
BigInt lgv_determinant(const std::vector<LatticePoint>& starts, const std::vector<LatticePoint>& ends);

/// det(binom(a+c, a-i+j))_{1<=i,j<=b}.
BigInt box_det_count(const BoxDims& box);

/// Endpoints for the box: A_i = (-i, i), E_i = (a-i, c+i), i = 1..b.
std::vector<LatticePoint> box_starts(const BoxDims& box);
std::vector<LatticePoint> box_ends(const BoxDims& box);

/// Path P_j (j = 1..b) describes column b+1-j: its k-th Up step is
/// preceded by a - #{i : pi_{i,b+1-j} >= k} Right steps. Throws
/// InvalidArgument when pp does not fit the box.
PathFamily pp_to_paths(const PlanePartition& pp, const BoxDims& box);
/// Inverse of pp_to_paths. Throws InvalidArgument on wrong endpoints,
/// intersecting paths or a path count other than b.
PlanePartition paths_to_pp(const PathFamily& family, const BoxDims& box);

/// Calls visit for every nonintersecting family (P_1..P_n), P_i from
/// starts[i] to ends[i], by backtracking over paths.
void for_each_nonintersecting_family(const std::vector<LatticePoint>& starts,
                                     const std::vector<LatticePoint>& ends,
                                     const std::function<void(const PathFamily&)>& visit);
BigInt count_box_families(const BoxDims& box);

/// One path per line: "x y STEPS" with STEPS over {R,U} ("-" for none).
std::string format_path_family(const PathFamily& family);
PathFamily parse_path_family(const std::string& text);

}  // namespace ppwb
