#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ppwb/bigint.hpp"

namespace ppwb {

using IntMatrix = std::vector<std::vector<int>>;
/// Row r (0-based) has n - r entries.
using Triangle2D = std::vector<std::vector<int>>;

/// Square, entries in {-1, 0, 1}, and along every row and column the nonzero
/// entries alternate in sign, starting and ending with 1.
bool validate_asm(const IntMatrix& m);

/// Rows strictly increasing, row r of length n - r, first row 1..n, and
/// t[r][c] <= t[r+1][c] <= t[r][c+1].
bool is_monotone_triangle(const Triangle2D& t);

/// Row r of the triangle lists the 1-positions of the sum of ASM rows r..n-1.
/// Throws InvalidArgument on an invalid ASM.
Triangle2D asm_to_mt(const IntMatrix& m);
/// Throws InvalidArgument unless t is a monotone triangle.
IntMatrix mt_to_asm(const Triangle2D& t);

void for_each_monotone_triangle(int n, const std::function<void(const Triangle2D&)>& visit);
std::vector<IntMatrix> enumerate_asm(int n);

/// First k rows of a triangle with rows of length n, n-1, ...: rows weakly
/// increasing, columns weakly decreasing, b[0][c] <= m + c + 1.
struct MagogTrapezoid {
  int m = 0;
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> rows;
};

/// First k columns of a triangle with rows of length n, n-1, ...: rows
/// strictly increasing, columns weakly increasing, a[r+1][c] <= a[r][c+1],
/// and a[r][k-1] <= m + k + r (0-based r).
struct GogTrapezoid {
  int m = 0;
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> rows;  // row r holds min(k, n - r) entries
};

/// Throws InvalidParams unless m >= 0 and 1 <= k <= n.
void check_params(int m, int n, int k);
void for_each_magog(int m, int n, int k, const std::function<void(const MagogTrapezoid&)>& visit);
void for_each_gog(int m, int n, int k, const std::function<void(const GogTrapezoid&)>& visit);
std::vector<MagogTrapezoid> enumerate_magog(int m, int n, int k);
std::vector<GogTrapezoid> enumerate_gog(int m, int n, int k);
BigInt count_magog(int m, int n, int k);
BigInt count_gog(int m, int n, int k);

/// How an entry that is both a Maximum and a Minimum in the same counted
/// line is counted.
enum class OverlapConvention { Both, MaxOnly, MinOnly };
OverlapConvention parse_overlap(const std::string& s);
std::string to_string(OverlapConvention c);

struct Stats {
  int maxima = 0;
  int minima = 0;
  bool operator==(const Stats&) const = default;
};

/// Maxima in the first row, Minima in the last row.
Stats magog_stats(const MagogTrapezoid& t, OverlapConvention c = OverlapConvention::Both);
/// Maxima in the right-most column, Minima in the left-most column.
Stats gog_stats(const GogTrapezoid& g, OverlapConvention c = OverlapConvention::Both);

using StatTable = std::map<std::pair<int, int>, BigInt>;

struct ConjectureTables {
  int m = 0;
  int n = 0;
  int k = 0;
  OverlapConvention convention = OverlapConvention::Both;
  StatTable magog;           // (maxima, minima)
  StatTable gog;             // (minima, maxima): keyed so equality is the prediction
  StatTable gog_unswapped;   // (maxima, minima)
  bool equal() const { return magog == gog; }
  bool unswapped_equal() const { return magog == gog_unswapped; }
};

ConjectureTables conjecture_tables(int m, int n, int k, OverlapConvention c = OverlapConvention::Both);
BigInt table_total(const StatTable& t);
/// {"params":{m,n,k}, "magog":[[s,t,"count"]...], "gog":[...], "equal":bool,
/// "convention":..., "unswapped_equal":bool}
std::string conjecture_json(const ConjectureTables& t);

/// binom(m+2n-s-t-2, m+n-2) - binom(m+2n-s-t-2, m+n-1), where binom(x, j)
/// is 0 for x < 0 or j outside 0..x.
BigInt k1_count(int m, int n, int s, int t);

/// Totally symmetric self-complementary plane partitions in the 2n-cube
/// counted against (0, n, n)-Magog trapezoids.
struct TsscppMagog {
  BigInt tsscpp;
  BigInt magog;
  bool ok() const { return tsscpp == magog; }
};
TsscppMagog tsscpp_magog_check(int n);

std::string format_triangle(const Triangle2D& t);
std::string format_matrix(const IntMatrix& m);
/// Rows of whitespace-separated integers; blank lines ignored.
IntMatrix parse_int_rows(const std::string& text);

}  // namespace ppwb
