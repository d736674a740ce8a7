#pragma once

#include <functional>
#include <vector>

#include "ppwb/bigint.hpp"
#include "ppwb/core.hpp"
#include "ppwb/mpoly.hpp"
#include "ppwb/qpoly.hpp"

namespace ppwb {

/// Rows weakly increasing, columns strictly increasing, positive entries.
class SemistandardTableau {
 public:
  /// Throws InvalidArgument if the rows do not have the shape's lengths or
  /// break the monotonicity rules.
  SemistandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int max_entry() const;
  bool operator==(const SemistandardTableau&) const = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

using TableauVisitor = std::function<void(const SemistandardTableau&)>;

/// Tableaux of the shape with entries in 1..n, filled row by row with each
/// cell tried from its smallest value up.
void for_each_ssyt(const Partition& shape, int n, const TableauVisitor& visit);
std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape, int n);
BigInt count_ssyt(const Partition& shape, int n);

/// Sum over tableaux of prod x_i^(number of entries i).
MultivariatePolynomial schur_sum(const Partition& shape, int n);

/// s_shape(q, q^2, ..., q^n) as det(q^{i(shape_j+n-j)}) / det(q^{i(n-j)}).
/// Throws InvalidArgument when the shape has more than n parts.
QPolynomial schur_principal_bialternant(const Partition& shape, int n);

/// prod_{i<j} (shape_i - shape_j + j - i) / (j - i): the number of tableaux
/// with entries in 1..n.
BigInt weyl_dimension(const Partition& shape, int n);

/// s_{(b^a)}(q, ..., q^{a+c}) == q^{b(a+1)a/2} * box_gf(box).
bool verify_mmschur(const BoxDims& box);

/// T[i][j] = pi[a+1-i][b+1-j] + i (1-based). Throws InvalidArgument when pp
/// does not fit the box.
SemistandardTableau pp_box_to_ssyt(const PlanePartition& pp, const BoxDims& box);
/// Inverse; throws InvalidArgument for a tableau of shape other than (b^a)
/// or with entries above a+c.
PlanePartition ssyt_to_pp_box(const SemistandardTableau& t, const BoxDims& box);

/// (b1+d1, ..., b1+d_{a1}, b1-d_{a1}, ..., b1-d1) over b1 >= d1 >= ... >= d_{a1} >= 0.
std::vector<Partition> sc_shapes(int a1, int b1);

struct ScSumResult {
  BigInt tableau_sum;  // sum over sc_shapes of the tableau counts with entries <= a1+c1
  BigInt formula;      // self-complementary count in (2a1, 2b1, 2c1) from the closed form
  BigInt enumerated;   // same count by constrained enumeration
  bool ok() const { return tableau_sum == formula && formula == enumerated; }
};
ScSumResult verify_sc_sum(int a1, int b1, int c1);

/// sum over sc_shapes(a1, b1) of s_lambda(x_1..x_m) == s_{(b1^a1)}(x_1..x_m)^2.
bool verify_s2(int a1, int b1, int m);

std::string format_tableau(const SemistandardTableau& t);

}  // namespace ppwb
