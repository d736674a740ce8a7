#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ppwb/core.hpp"
#include "ppwb/qpoly.hpp"

namespace ppwb {

using Cube = std::array<int, 3>;  // (i, j, k), 1-indexed

/// Downward-closed set of unit cubes: the pile-of-cubes picture.
class CubeSet {
 public:
  CubeSet() = default;
  /// Throws InvalidArgument unless the set is downward closed with all
  /// coordinates >= 1.
  explicit CubeSet(std::set<Cube> cells);

  const std::set<Cube>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(const Cube& x) const { return cells_.count(x) != 0; }
  bool fits(const BoxDims& box) const;
  bool operator==(const CubeSet&) const = default;

 private:
  std::set<Cube> cells_;
};

bool is_downward_closed(const std::set<Cube>& cells);

CubeSet to_cubes(const PlanePartition& pp);
PlanePartition from_cubes(const CubeSet& s);

/// Transpose: pi_{i,j} -> pi_{j,i}.
PlanePartition reflect(const PlanePartition& pp);
/// (i, j, k) -> (j, k, i), an order-3 map.
CubeSet rotate(const CubeSet& s);
/// {(a+1-i, b+1-j, c+1-k) : (i,j,k) not in s}. Throws InvalidArgument if s
/// does not fit the box.
CubeSet complement(const CubeSet& s, const BoxDims& box);

/// The ten classes: 1 all, 2 symmetric, 3 cyclically symmetric, 4 totally
/// symmetric, 5 self-complementary, 6 transpose-complementary, 7 symmetric
/// self-complementary, 8 cyclically symmetric transpose-complementary,
/// 9 cyclically symmetric self-complementary, 10 totally symmetric
/// self-complementary.
class SymmetryClass {
 public:
  explicit SymmetryClass(int id);
  int id() const { return id_; }
  bool uses_reflection() const;
  bool uses_rotation() const;
  bool uses_complement() const;            // pi = pi^c
  bool uses_transpose_complement() const;  // pi = reflect(pi^c)
  /// Whether the class is defined for the box (a = b for reflections, a cube
  /// for rotation).
  bool admits(const BoxDims& box) const;
  std::string name() const;
  bool operator==(const SymmetryClass&) const = default;

 private:
  int id_;
};

enum class Weight {
  Size,      // |pi|
  HalfSize,  // sum over j <= i of pi_{i,j}
  Orbit,     // cubes (i,j,k) with i <= j <= k
};

long weight_of(const PlanePartition& pp, Weight w);
Weight parse_weight(const std::string& s);
std::string to_string(Weight w);

/// Class membership by composing reflect/rotate/complement. False when the
/// box does not admit the class or pp does not fit.
bool is_in_class(const PlanePartition& pp, const BoxDims& box, SymmetryClass cls);

/// Members of the class in the box. The search branches on unit cubes with
/// every cube tied to its images under the class's symmetry group and
/// downward closure propagated, so forced cells are never branched on.
/// Empty when the box does not admit the class.
void for_each_in_class(SymmetryClass cls, const BoxDims& box, const PlanePartitionVisitor& visit);
std::vector<PlanePartition> enumerate_class(SymmetryClass cls, const BoxDims& box);
std::uint64_t count_class(SymmetryClass cls, const BoxDims& box);

/// Number of independent cube variables (cube orbits) the class search
/// branches over; 0 when the class is empty for the box.
int class_search_variables(SymmetryClass cls, const BoxDims& box);

/// Sum of q^weight over the class members in the box.
QPolynomial class_gf(SymmetryClass cls, const BoxDims& box, Weight weight);

}  // namespace ppwb
