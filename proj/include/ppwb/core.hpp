#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ppwb {

/// A weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long weight() const;
  // Part i (0-based); 0 past the end.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// Frobenius coordinates with the diagonal counted on both sides:
/// (p1, p2-1, p3-2, ... | p'1, p'2-1, ...), positive entries only.
struct FrobeniusPair {
  std::vector<int> first;
  std::vector<int> second;
  bool operator==(const FrobeniusPair&) const = default;
};

FrobeniusPair frobenius_pair(const Partition& p);
/// Inverse of frobenius_pair. Throws InvalidArgument unless both
/// sequences are strictly decreasing, positive and of equal length.
Partition from_frobenius(const FrobeniusPair& pair);

/// Every partition of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

struct BoxDims {
  int a = 1;  // rows
  int b = 1;  // columns
  int c = 0;  // entry bound

  BoxDims() = default;
  BoxDims(int a_, int b_, int c_);
  long volume() const { return static_cast<long>(a) * b * c; }
  bool operator==(const BoxDims&) const = default;
};

std::string to_string(const BoxDims& box);

/// Plane partition stored as a zero-padded rectangular grid. Equality
/// ignores trailing zero rows and columns.
class PlanePartition {
 public:
  PlanePartition() = default;
  /// Rows may be ragged; missing entries are zero. Throws InvalidArgument
  /// on negative entries or when rows/columns are not weakly decreasing.
  explicit PlanePartition(const std::vector<std::vector<int>>& rows);
  static PlanePartition zero(int rows, int cols);
  /// Row-major grid; the caller guarantees the plane partition inequalities.
  static PlanePartition from_valid_grid(int rows, int cols, std::vector<int> cells);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // 0-based access; 0 outside the stored grid.
  int at(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_) return 0;
    return cells_[static_cast<std::size_t>(i) * cols_ + j];
  }
  int max_entry() const { return at(0, 0); }
  bool fits(const BoxDims& box) const;
  // Grid trimmed of zero rows/columns.
  PlanePartition trimmed() const;
  // Grid padded (or trimmed) to exactly rows x cols; throws if a nonzero
  // entry would be dropped.
  PlanePartition padded(int rows, int cols) const;
  std::vector<std::vector<int>> to_rows() const;

  bool operator==(const PlanePartition& other) const;
  bool operator<(const PlanePartition& other) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> cells_;
};

long size(const PlanePartition& pp);
Partition shape(const PlanePartition& pp);
/// Sum over cells (l, l+i), 1-based; i = 0 is the trace.
long i_trace(const PlanePartition& pp, int i);
inline long trace(const PlanePartition& pp) { return i_trace(pp, 0); }
/// Sum of entries with column index <= row index.
long half_size(const PlanePartition& pp);

/// Reverse plane partition of a given shape: rows and columns weakly increasing.
class ReversePlanePartition {
 public:
  ReversePlanePartition(Partition shape, std::vector<std::vector<int>> rows);
  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  long size() const;
  long i_trace(int i) const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

using PlanePartitionVisitor = std::function<void(const PlanePartition&)>;

/// Every a x b array with entries in 0..c satisfying the plane partition
/// inequalities, row-major with each cell tried from its largest value down.
void for_each_in_box(const BoxDims& box, const PlanePartitionVisitor& visit);
std::vector<PlanePartition> enumerate_box(const BoxDims& box);
std::uint64_t count_box(const BoxDims& box);

/// Every plane partition with 1 <= |pp| <= n.
void for_each_up_to_size(int n, const PlanePartitionVisitor& visit);
std::vector<PlanePartition> enumerate_by_size(int n);

/// Text format: one row per line, space-separated integers, terminated by a
/// blank line or end of input. Throws ParseError naming the offending cell.
PlanePartition parse_plane_partition(std::istream& in);
PlanePartition parse_plane_partition(const std::string& text);
/// Rows with their trailing zeros removed; the empty partition prints nothing.
std::string format_plane_partition(const PlanePartition& pp);

}  // namespace ppwb
