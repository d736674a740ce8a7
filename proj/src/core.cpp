#include "ppwb/core.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

#include "ppwb/error.hpp"

namespace ppwb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

long Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  for (int j = 1; j <= p[0]; ++j) {
    int count = 0;
    while (count < p.length() && p[count] >= j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

FrobeniusPair frobenius_pair(const Partition& p) {
  const Partition pc = conjugate(p);
  FrobeniusPair out;
  for (int i = 0; p[i] - i > 0; ++i) {
    out.first.push_back(p[i] - i);
    out.second.push_back(pc[i] - i);
  }
  return out;
}

Partition from_frobenius(const FrobeniusPair& pair) {
  const auto& alpha = pair.first;
  const auto& beta = pair.second;
  if (alpha.size() != beta.size())
    throw InvalidArgument("Frobenius components differ in length");
  const int d = static_cast<int>(alpha.size());
  for (int i = 0; i < d; ++i) {
    if (alpha[i] <= 0 || beta[i] <= 0)
      throw InvalidArgument("Frobenius components must be positive");
    if (i > 0 && (alpha[i] >= alpha[i - 1] || beta[i] >= beta[i - 1]))
      throw InvalidArgument("Frobenius components must be strictly decreasing");
  }
  std::vector<int> parts;
  for (int i = 0; i < d; ++i) parts.push_back(alpha[i] + i);
  // Rows below the Durfee square are read off the column lengths.
  const int rows = d == 0 ? 0 : beta[0];
  for (int i = d; i < rows; ++i) {
    int len = 0;
    for (int j = 0; j < d; ++j)
      if (beta[j] + j >= i + 1) ++len;
    if (len == 0) break;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n < 0) return out;
  partitions_rec(n, n, cur, out);
  return out;
}

BoxDims::BoxDims(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
  if (a < 1 || b < 1 || c < 0) throw InvalidDims("box needs a, b >= 1 and c >= 0");
}

std::string to_string(const BoxDims& box) {
  return std::to_string(box.a) + "x" + std::to_string(box.b) + "x" + std::to_string(box.c);
}

namespace {

struct CellViolation {
  int row;
  int col;
  std::string message;
};

// First violated plane partition inequality in a rectangular grid, if any.
std::optional<CellViolation> find_violation(int rows, int cols, const std::vector<int>& cells) {
  auto at = [&](int i, int j) { return cells[static_cast<std::size_t>(i) * cols + j]; };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int v = at(i, j);
      std::ostringstream msg;
      if (v < 0) {
        msg << "entry (" << i + 1 << "," << j + 1 << ") = " << v << " is negative";
        return CellViolation{i, j, msg.str()};
      }
      if (j > 0 && v > at(i, j - 1)) {
        msg << "entry (" << i + 1 << "," << j + 1 << ") = " << v << " exceeds its left neighbour ("
            << i + 1 << "," << j << ") = " << at(i, j - 1);
        return CellViolation{i, j, msg.str()};
      }
      if (i > 0 && v > at(i - 1, j)) {
        msg << "entry (" << i + 1 << "," << j + 1 << ") = " << v << " exceeds the entry above ("
            << i << "," << j + 1 << ") = " << at(i - 1, j);
        return CellViolation{i, j, msg.str()};
      }
    }
  }
  return std::nullopt;
}

std::vector<int> rectangular(const std::vector<std::vector<int>>& rows, int& ncols) {
  ncols = 0;
  for (const auto& r : rows) ncols = std::max(ncols, static_cast<int>(r.size()));
  std::vector<int> cells(rows.size() * static_cast<std::size_t>(ncols), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy(rows[i].begin(), rows[i].end(), cells.begin() + static_cast<long>(i * ncols));
  return cells;
}

}  // namespace

PlanePartition::PlanePartition(const std::vector<std::vector<int>>& rows) {
  int ncols = 0;
  auto cells = rectangular(rows, ncols);
  const int nrows = static_cast<int>(rows.size());
  if (auto bad = find_violation(nrows, ncols, cells)) throw InvalidArgument(bad->message);
  rows_ = ncols == 0 ? 0 : nrows;
  cols_ = ncols;
  cells_ = std::move(cells);
  if (rows_ == 0) cells_.clear();
}

PlanePartition PlanePartition::zero(int rows, int cols) {
  return from_valid_grid(rows, cols, std::vector<int>(static_cast<std::size_t>(rows) * cols, 0));
}

PlanePartition PlanePartition::from_valid_grid(int rows, int cols, std::vector<int> cells) {
  PlanePartition pp;
  if (rows > 0 && cols > 0) {
    pp.rows_ = rows;
    pp.cols_ = cols;
    pp.cells_ = std::move(cells);
  }
  return pp;
}

bool PlanePartition::fits(const BoxDims& box) const {
  const PlanePartition t = trimmed();
  return t.rows_ <= box.a && t.cols_ <= box.b && t.max_entry() <= box.c;
}

PlanePartition PlanePartition::trimmed() const {
  int r = 0;
  int c = 0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) > 0) {
        r = std::max(r, i + 1);
        c = std::max(c, j + 1);
      }
  return padded(r, c);
}

PlanePartition PlanePartition::padded(int rows, int cols) const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((i >= rows || j >= cols) && at(i, j) > 0)
        throw InvalidArgument("plane partition does not fit " + std::to_string(rows) + "x" +
                              std::to_string(cols));
  std::vector<int> cells(static_cast<std::size_t>(rows) * cols, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) cells[static_cast<std::size_t>(i) * cols + j] = at(i, j);
  return from_valid_grid(rows, cols, std::move(cells));
}

std::vector<std::vector<int>> PlanePartition::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = at(i, j);
  return out;
}

bool PlanePartition::operator==(const PlanePartition& other) const {
  const int r = std::max(rows_, other.rows_);
  const int c = std::max(cols_, other.cols_);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (at(i, j) != other.at(i, j)) return false;
  return true;
}

bool PlanePartition::operator<(const PlanePartition& other) const {
  const PlanePartition x = trimmed();
  const PlanePartition y = other.trimmed();
  return std::tie(x.rows_, x.cols_, x.cells_) < std::tie(y.rows_, y.cols_, y.cells_);
}

long size(const PlanePartition& pp) {
  long s = 0;
  for (int i = 0; i < pp.rows(); ++i)
    for (int j = 0; j < pp.cols(); ++j) s += pp.at(i, j);
  return s;
}

Partition shape(const PlanePartition& pp) {
  std::vector<int> parts;
  for (int i = 0; i < pp.rows(); ++i) {
    int len = 0;
    while (len < pp.cols() && pp.at(i, len) > 0) ++len;
    if (len == 0) break;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

long i_trace(const PlanePartition& pp, int i) {
  long s = 0;
  for (int l = 0; l < pp.rows(); ++l) s += pp.at(l, l + i);
  return s;
}

long half_size(const PlanePartition& pp) {
  long s = 0;
  for (int i = 0; i < pp.rows(); ++i)
    for (int j = 0; j <= i && j < pp.cols(); ++j) s += pp.at(i, j);
  return s;
}

ReversePlanePartition::ReversePlanePartition(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw InvalidArgument("reverse plane partition rows do not match its shape");
  for (int i = 0; i < shape_.length(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_[i])
      throw InvalidArgument("reverse plane partition row length does not match its shape");
    for (int j = 0; j < shape_[i]; ++j) {
      const int v = rows_[i][j];
      if (v < 0 || (j > 0 && v < rows_[i][j - 1]) || (i > 0 && v < rows_[i - 1][j]))
        throw InvalidArgument("reverse plane partition entries must be weakly increasing");
    }
  }
}

long ReversePlanePartition::size() const {
  long s = 0;
  for (const auto& r : rows_) s += std::accumulate(r.begin(), r.end(), 0L);
  return s;
}

long ReversePlanePartition::i_trace(int i) const {
  long s = 0;
  for (int l = 0; l < shape_.length(); ++l)
    if (l + i >= 0 && l + i < shape_[l]) s += rows_[l][l + i];
  return s;
}

namespace {

// Row-major backtracking; `budget` < 0 disables the running-sum bound.
class BoxWalker {
 public:
  BoxWalker(int rows, int cols, int bound, long budget, int min_total, const PlanePartitionVisitor& visit)
      : rows_(rows), cols_(cols), bound_(bound), budget_(budget), min_total_(min_total), visit_(visit),
        cells_(static_cast<std::size_t>(rows) * cols, 0) {}

  void run() { step(0, 0); }

 private:
  void step(int pos, long total) {
    if (pos == rows_ * cols_) {
      if (total >= min_total_) visit_(PlanePartition::from_valid_grid(rows_, cols_, cells_));
      return;
    }
    const int i = pos / cols_;
    const int j = pos % cols_;
    int hi = bound_;
    if (i > 0) hi = std::min(hi, cells_[pos - cols_]);
    if (j > 0) hi = std::min(hi, cells_[pos - 1]);
    if (budget_ >= 0) hi = static_cast<int>(std::min<long>(hi, budget_ - total));
    for (int v = hi; v >= 0; --v) {
      cells_[pos] = v;
      step(pos + 1, total + v);
    }
    cells_[pos] = 0;
  }

  int rows_;
  int cols_;
  int bound_;
  long budget_;
  int min_total_;
  const PlanePartitionVisitor& visit_;
  std::vector<int> cells_;
};

}  // namespace

void for_each_in_box(const BoxDims& box, const PlanePartitionVisitor& visit) {
  BoxWalker(box.a, box.b, box.c, -1, 0, visit).run();
}

std::vector<PlanePartition> enumerate_box(const BoxDims& box) {
  std::vector<PlanePartition> out;
  for_each_in_box(box, [&](const PlanePartition& pp) { out.push_back(pp); });
  return out;
}

std::uint64_t count_box(const BoxDims& box) {
  std::uint64_t n = 0;
  for_each_in_box(box, [&](const PlanePartition&) { ++n; });
  return n;
}

void for_each_up_to_size(int n, const PlanePartitionVisitor& visit) {
  if (n < 1) return;
  BoxWalker(n, n, n, n, 1, visit).run();
}

std::vector<PlanePartition> enumerate_by_size(int n) {
  std::vector<PlanePartition> out;
  for_each_up_to_size(n, [&](const PlanePartition& pp) { out.push_back(pp.trimmed()); });
  return out;
}

PlanePartition parse_plane_partition(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (rows.empty()) continue;  // leading blank lines
      break;
    }
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw ParseError("line " + std::to_string(line_no) + ", cell (" + std::to_string(rows.size() + 1) +
                         "," + std::to_string(row.size() + 1) + "): not an integer: '" + tok + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  int ncols = 0;
  auto cells = rectangular(rows, ncols);
  const int nrows = static_cast<int>(rows.size());
  // A short row is padded with zeros; a longer row below it is then the violation.
  if (auto bad = find_violation(nrows, ncols, cells)) throw ParseError(bad->message);
  return PlanePartition::from_valid_grid(nrows, ncols, std::move(cells));
}

PlanePartition parse_plane_partition(const std::string& text) {
  std::istringstream in(text);
  return parse_plane_partition(in);
}

std::string format_plane_partition(const PlanePartition& pp) {
  std::ostringstream out;
  const PlanePartition t = pp.trimmed();
  for (int i = 0; i < t.rows(); ++i) {
    for (int j = 0; j < t.cols() && t.at(i, j) > 0; ++j) {
      if (j > 0) out << ' ';
      out << t.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ppwb
