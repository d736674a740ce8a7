#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ppwb/bigint.hpp"
#include "ppwb/core.hpp"
#include "ppwb/mpoly.hpp"
#include "ppwb/qpoly.hpp"

namespace ppwb {

/// Left-justified rows of varying length.
using RaggedArray = std::vector<std::vector<int>>;

/// Each row of pp replaced by its conjugate partition.
RaggedArray row_conjugate(const PlanePartition& pp);
/// Inverse of row_conjugate; throws InvalidArgument unless every row is a
/// partition and the result is a plane partition.
PlanePartition row_unconjugate(const RaggedArray& arr);

/// Plane partitions whose columns strictly decrease, with equal shapes.
struct ColumnStrictPair {
  PlanePartition first;
  PlanePartition second;
  bool operator==(const ColumnStrictPair&) const = default;
};

bool is_column_strict(const PlanePartition& pp);
bool is_valid_pair(const ColumnStrictPair& pair);

/// Column k of the pair holds the two Frobenius components of column k of
/// arr. Throws InvalidArgument if a column of arr is not a partition.
ColumnStrictPair frobenius_split(const RaggedArray& arr);
RaggedArray frobenius_merge(const ColumnStrictPair& pair);

/// Finitely supported (i, j) -> m_{i,j} > 0, with i, j >= 1.
using WeightMatrix = std::map<std::pair<int, int>, int>;

/// Inverse RSK with the order of the alphabet reversed. The i's are read
/// from the second member and the j's from the first. Throws
/// InvalidArgument for an invalid pair.
WeightMatrix knuth_map(const ColumnStrictPair& pair);
/// RSK insertion with the order reversed: the biword is read with i
/// decreasing (ties by j decreasing); each j is inserted into weakly
/// decreasing rows by bumping the leftmost entry smaller than it.
ColumnStrictPair knuth_unmap(const WeightMatrix& m);

WeightMatrix stanley_map(const PlanePartition& pp);
PlanePartition stanley_unmap(const WeightMatrix& m);

long matrix_total(const WeightMatrix& m);   // sum m_{i,j}
long matrix_weight(const WeightMatrix& m);  // sum (i+j-1) m_{i,j}
std::string format_weight_matrix(const WeightMatrix& m);

/// Coefficients c[n][k] of t^k q^n for n <= max_degree.
class BivariateSeries {
 public:
  explicit BivariateSeries(int max_degree);
  int max_degree() const { return max_degree_; }
  const BigInt& coefficient(int k, int n) const { return coeffs_[n][k]; }
  void add(int k, int n, const BigInt& c) { coeffs_[n][k] += c; }
  /// Times 1/(1 - t q^s), truncated.
  void multiply_geometric(int s);
  QPolynomial at_t_one() const;
  bool operator==(const BivariateSeries&) const = default;

 private:
  int max_degree_;
  std::vector<std::vector<BigInt>> coeffs_;  // coeffs_[n][k], k <= n
};

BivariateSeries trace_gf_bruteforce(int n);
BivariateSeries trace_gf_product(int n);

/// Reverse plane partitions of the shape with |pi| <= max_size.
void for_each_rpp(const Partition& shape, int max_size,
                  const std::function<void(const ReversePlanePartition&)>& visit);

struct GansnerResult {
  MultivariatePolynomial enumerated;  // sum over RPPs of prod x_i^{t_i}
  MultivariatePolynomial product;     // prod over cells of 1/(1 - x(rho)), truncated
  bool ok() const { return enumerated == product; }
};
/// Variable x_d (d = 1-l(shape) .. shape_1 - 1) is stored at index d + l(shape) - 1.
GansnerResult gansner_check(const Partition& shape, int max_degree);

}  // namespace ppwb
