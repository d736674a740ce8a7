#include "ppwb/trace.hpp"

#include <algorithm>
#include <sstream>

#include "ppwb/error.hpp"

namespace ppwb {

RaggedArray row_conjugate(const PlanePartition& pp) {
  RaggedArray out;
  for (const auto& row : pp.trimmed().to_rows()) {
    std::vector<int> parts;
    for (int v : row)
      if (v > 0) parts.push_back(v);
    out.push_back(conjugate(Partition(parts)).parts());
  }
  return out;
}

PlanePartition row_unconjugate(const RaggedArray& arr) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : arr) rows.push_back(conjugate(Partition(row)).parts());
  return PlanePartition(rows);
}

bool is_column_strict(const PlanePartition& pp) {
  for (int i = 1; i < pp.rows(); ++i)
    for (int j = 0; j < pp.cols(); ++j)
      if (pp.at(i, j) > 0 && pp.at(i, j) >= pp.at(i - 1, j)) return false;
  return true;
}

bool is_valid_pair(const ColumnStrictPair& pair) {
  return is_column_strict(pair.first) && is_column_strict(pair.second) && shape(pair.first) == shape(pair.second);
}

namespace {

std::vector<int> column(const RaggedArray& arr, std::size_t k) {
  std::vector<int> col;
  for (const auto& row : arr) {
    if (k >= row.size()) break;
    col.push_back(row[k]);
  }
  return col;
}

std::size_t width(const RaggedArray& arr) {
  std::size_t w = 0;
  for (const auto& row : arr) w = std::max(w, row.size());
  return w;
}

// Columns to rows, both left/top justified.
RaggedArray from_columns(const std::vector<std::vector<int>>& cols) {
  RaggedArray rows;
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t i = 0; i < cols[k].size(); ++i) {
      if (rows.size() <= i) rows.resize(i + 1);
      if (rows[i].size() != k) throw InvalidArgument("columns are not top-justified");
      rows[i].push_back(cols[k][i]);
    }
  return rows;
}

std::vector<int> pp_column(const PlanePartition& pp, int k) {
  std::vector<int> col;
  for (int i = 0; i < pp.rows() && pp.at(i, k) > 0; ++i) col.push_back(pp.at(i, k));
  return col;
}

}  // namespace

ColumnStrictPair frobenius_split(const RaggedArray& arr) {
  std::vector<std::vector<int>> firsts;
  std::vector<std::vector<int>> seconds;
  for (std::size_t k = 0; k < width(arr); ++k) {
    const auto f = frobenius_pair(Partition(column(arr, k)));
    firsts.push_back(f.first);
    seconds.push_back(f.second);
  }
  ColumnStrictPair pair{PlanePartition(from_columns(firsts)), PlanePartition(from_columns(seconds))};
  return pair;
}

RaggedArray frobenius_merge(const ColumnStrictPair& pair) {
  if (!is_valid_pair(pair)) throw InvalidArgument("not a pair of column-strict plane partitions of equal shape");
  std::vector<std::vector<int>> cols;
  for (int k = 0; k < pair.first.cols(); ++k) {
    auto first = pp_column(pair.first, k);
    if (first.empty()) break;
    cols.push_back(from_frobenius({first, pp_column(pair.second, k)}).parts());
  }
  return from_columns(cols);
}

namespace {

using Rows = std::vector<std::vector<int>>;

Rows nonzero_rows(const PlanePartition& pp) {
  Rows rows;
  for (const auto& row : pp.trimmed().to_rows()) {
    std::vector<int> r;
    for (int v : row)
      if (v > 0) r.push_back(v);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

WeightMatrix knuth_map(const ColumnStrictPair& pair) {
  if (!is_valid_pair(pair)) throw InvalidArgument("not a pair of column-strict plane partitions of equal shape");
  Rows p = nonzero_rows(pair.first);
  Rows q = nonzero_rows(pair.second);
  WeightMatrix m;
  while (!q.empty()) {
    // Smallest recording value, rightmost occurrence: always a corner.
    int best_row = 0;
    for (int r = 1; r < static_cast<int>(q.size()); ++r) {
      const int v = q[r].back();
      const int best = q[best_row].back();
      if (v < best || (v == best && q[r].size() > q[best_row].size())) best_row = r;
    }
    const int best_val = q[best_row].back();
    const int i = best_val;
    int y = p[best_row].back();
    p[best_row].pop_back();
    q[best_row].pop_back();
    for (int r = best_row - 1; r >= 0; --r) {
      // Rightmost entry larger than y leaves the row and y takes its place.
      int pos = static_cast<int>(p[r].size()) - 1;
      while (p[r][pos] <= y) --pos;
      std::swap(p[r][pos], y);
    }
    ++m[{i, y}];
    if (p[best_row].empty()) {
      p.erase(p.begin() + best_row);
      q.erase(q.begin() + best_row);
    }
  }
  return m;
}

ColumnStrictPair knuth_unmap(const WeightMatrix& m) {
  std::vector<std::pair<int, int>> word;
  for (const auto& [ij, count] : m) {
    if (ij.first < 1 || ij.second < 1 || count < 0) throw InvalidArgument("weight matrix indices start at 1");
    for (int c = 0; c < count; ++c) word.push_back(ij);
  }
  std::sort(word.begin(), word.end(), [](const auto& x, const auto& y) { return x > y; });
  Rows p;
  Rows q;
  for (const auto& [i, j] : word) {
    int x = j;
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({i});
        break;
      }
      auto it = std::find_if(p[r].begin(), p[r].end(), [&](int v) { return v < x; });
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(i);
        break;
      }
      std::swap(*it, x);
    }
  }
  return {PlanePartition(p), PlanePartition(q)};
}

WeightMatrix stanley_map(const PlanePartition& pp) { return knuth_map(frobenius_split(row_conjugate(pp))); }

PlanePartition stanley_unmap(const WeightMatrix& m) { return row_unconjugate(frobenius_merge(knuth_unmap(m))); }

long matrix_total(const WeightMatrix& m) {
  long s = 0;
  for (const auto& [ij, c] : m) s += c;
  return s;
}

long matrix_weight(const WeightMatrix& m) {
  long s = 0;
  for (const auto& [ij, c] : m) s += static_cast<long>(ij.first + ij.second - 1) * c;
  return s;
}

std::string format_weight_matrix(const WeightMatrix& m) {
  std::ostringstream out;
  for (const auto& [ij, c] : m) out << ij.first << ' ' << ij.second << ' ' << c << '\n';
  return out.str();
}

BivariateSeries::BivariateSeries(int max_degree) : max_degree_(max_degree) {
  for (int n = 0; n <= max_degree; ++n) coeffs_.emplace_back(n + 1, BigInt(0));
}

void BivariateSeries::multiply_geometric(int s) {
  for (int n = s; n <= max_degree_; ++n)
    for (int k = 1; k <= n; ++k)
      if (k - 1 <= n - s) coeffs_[n][k] += coeffs_[n - s][k - 1];
}

QPolynomial BivariateSeries::at_t_one() const {
  std::vector<BigInt> c;
  for (const auto& row : coeffs_) {
    BigInt s = 0;
    for (const auto& v : row) s += v;
    c.push_back(s);
  }
  return QPolynomial(std::move(c));
}

BivariateSeries trace_gf_bruteforce(int n) {
  BivariateSeries s(n);
  s.add(0, 0, 1);
  for_each_up_to_size(n, [&](const PlanePartition& pp) { s.add(trace(pp), size(pp), 1); });
  return s;
}

BivariateSeries trace_gf_product(int n) {
  BivariateSeries s(n);
  s.add(0, 0, 1);
  // s pairs (i, j) have i + j - 1 = s.
  for (int deg = 1; deg <= n; ++deg)
    for (int rep = 0; rep < deg; ++rep) s.multiply_geometric(deg);
  return s;
}

void for_each_rpp(const Partition& shape, int max_size,
                  const std::function<void(const ReversePlanePartition&)>& visit) {
  std::vector<std::vector<int>> rows(shape.length());
  for (int i = 0; i < shape.length(); ++i) rows[i].assign(shape[i], 0);
  std::function<void(int, int, int)> rec = [&](int i, int j, int budget) {
    if (i == shape.length()) {
      visit(ReversePlanePartition(shape, rows));
      return;
    }
    if (j == shape[i]) {
      rec(i + 1, 0, budget);
      return;
    }
    int lo = 0;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, rows[i - 1][j]);
    for (int v = lo; v <= budget; ++v) {
      rows[i][j] = v;
      rec(i, j + 1, budget - v);
    }
  };
  rec(0, 0, max_size);
}

GansnerResult gansner_check(const Partition& shape, int max_degree) {
  const int len = shape.length();
  const int nvars = len + shape[0] - 1;
  const Partition conj = conjugate(shape);
  GansnerResult r{MultivariatePolynomial(nvars), MultivariatePolynomial::constant(nvars, 1)};
  for_each_rpp(shape, max_degree, [&](const ReversePlanePartition& rpp) {
    Exponent e(nvars, 0);
    for (int d = 1 - len; d <= shape[0] - 1; ++d) e[d + len - 1] = static_cast<int>(rpp.i_trace(d));
    r.enumerated.add_term(e, 1);
  });
  for (int i = 1; i <= len; ++i)
    for (int j = 1; j <= shape[i - 1]; ++j) {
      Exponent e(nvars, 0);
      for (int d = j - conj[j - 1]; d <= shape[i - 1] - i; ++d) e[d + len - 1] += 1;
      r.product = r.product.times_geometric(e, max_degree);
    }
  return r;
}

}  // namespace ppwb
