#include "ppwb/schur.hpp"

#include <sstream>

#include "ppwb/error.hpp"
#include "ppwb/matrix.hpp"
#include "ppwb/qseries.hpp"
#include "ppwb/symmetry.hpp"

namespace ppwb {

SemistandardTableau::SemistandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length()) throw InvalidArgument("tableau has the wrong number of rows");
  for (int i = 0; i < shape_.length(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_[i])
      throw InvalidArgument("tableau row " + std::to_string(i + 1) + " has the wrong length");
    for (int j = 0; j < shape_[i]; ++j) {
      const int v = rows_[i][j];
      if (v < 1) throw InvalidArgument("tableau entries must be positive");
      if (j > 0 && rows_[i][j - 1] > v)
        throw InvalidArgument("tableau row " + std::to_string(i + 1) + " is not weakly increasing");
      if (i > 0 && rows_[i - 1][j] >= v)
        throw InvalidArgument("tableau column " + std::to_string(j + 1) + " is not strictly increasing");
    }
  }
}

int SemistandardTableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int v : row) m = std::max(m, v);
  return m;
}

void for_each_ssyt(const Partition& shape, int n, const TableauVisitor& visit) {
  const Partition conj = conjugate(shape);
  std::vector<std::vector<int>> rows(shape.length());
  for (int i = 0; i < shape.length(); ++i) rows[i].assign(shape[i], 0);
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == shape.length()) {
      visit(SemistandardTableau(shape, rows));
      return;
    }
    if (j == shape[i]) {
      rec(i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
    // Leave room for the strictly larger entries below.
    const int hi = n - (conj[j] - 1 - i);
    for (int v = lo; v <= hi; ++v) {
      rows[i][j] = v;
      rec(i, j + 1);
    }
  };
  rec(0, 0);
}

std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape, int n) {
  std::vector<SemistandardTableau> out;
  for_each_ssyt(shape, n, [&](const SemistandardTableau& t) { out.push_back(t); });
  return out;
}

BigInt count_ssyt(const Partition& shape, int n) {
  BigInt c = 0;
  for_each_ssyt(shape, n, [&](const SemistandardTableau&) { c += 1; });
  return c;
}

MultivariatePolynomial schur_sum(const Partition& shape, int n) {
  MultivariatePolynomial s(n);
  for_each_ssyt(shape, n, [&](const SemistandardTableau& t) {
    Exponent e(n, 0);
    for (const auto& row : t.rows())
      for (int v : row) ++e[v - 1];
    s.add_term(e, 1);
  });
  return s;
}

namespace {

QPolynomial alternant(const std::vector<int>& exps) {
  const int n = static_cast<int>(exps.size());
  Matrix<QPolynomial> m(n, std::vector<QPolynomial>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < n; ++j) m[i - 1][j] = QPolynomial::monomial(i * exps[j]);
  return bareiss_determinant(std::move(m));
}

}  // namespace

QPolynomial schur_principal_bialternant(const Partition& shape, int n) {
  if (shape.length() > n) throw InvalidArgument("shape has more parts than variables");
  std::vector<int> top(n);
  std::vector<int> bottom(n);
  for (int j = 1; j <= n; ++j) {
    top[j - 1] = shape[j - 1] + n - j;
    bottom[j - 1] = n - j;
  }
  return alternant(top).divided_exactly_by(alternant(bottom));
}

BigInt weyl_dimension(const Partition& shape, int n) {
  if (shape.length() > n) return 0;
  BigRational r(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r *= BigRational(shape[i - 1] - shape[j - 1] + j - i, j - i);
  r.canonicalize();
  return r.get_num();
}

bool verify_mmschur(const BoxDims& box) {
  Partition rect(std::vector<int>(box.a, box.b));
  QPolynomial lhs = schur_principal_bialternant(rect, box.a + box.c);
  QPolynomial rhs = box_gf(box).shifted(box.b * box.a * (box.a + 1) / 2);
  return lhs == rhs;
}

SemistandardTableau pp_box_to_ssyt(const PlanePartition& pp, const BoxDims& box) {
  if (!pp.fits(box)) throw InvalidArgument("plane partition does not fit the box " + to_string(box));
  std::vector<std::vector<int>> rows(box.a, std::vector<int>(box.b));
  for (int i = 1; i <= box.a; ++i)
    for (int j = 1; j <= box.b; ++j) rows[i - 1][j - 1] = pp.at(box.a - i, box.b - j) + i;
  return SemistandardTableau(Partition(std::vector<int>(box.a, box.b)), std::move(rows));
}

PlanePartition ssyt_to_pp_box(const SemistandardTableau& t, const BoxDims& box) {
  if (!(t.shape() == Partition(std::vector<int>(box.a, box.b))))
    throw InvalidArgument("tableau shape is not " + std::to_string(box.b) + "^" + std::to_string(box.a));
  if (t.max_entry() > box.a + box.c) throw InvalidArgument("tableau entry exceeds a+c");
  std::vector<std::vector<int>> rows(box.a, std::vector<int>(box.b));
  for (int i = 1; i <= box.a; ++i)
    for (int j = 1; j <= box.b; ++j) rows[box.a - i][box.b - j] = t.rows()[i - 1][j - 1] - i;
  return PlanePartition(rows);
}

std::vector<Partition> sc_shapes(int a1, int b1) {
  std::vector<Partition> out;
  std::vector<int> delta(a1);
  std::function<void(int, int)> rec = [&](int k, int cap) {
    if (k == a1) {
      std::vector<int> parts;
      for (int d : delta) parts.push_back(b1 + d);
      for (int k2 = a1 - 1; k2 >= 0; --k2) parts.push_back(b1 - delta[k2]);
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      out.emplace_back(std::move(parts));
      return;
    }
    for (int d = cap; d >= 0; --d) {
      delta[k] = d;
      rec(k + 1, d);
    }
  };
  rec(0, b1);
  return out;
}

ScSumResult verify_sc_sum(int a1, int b1, int c1) {
  ScSumResult r;
  r.tableau_sum = 0;
  for (const auto& shape : sc_shapes(a1, b1)) r.tableau_sum += count_ssyt(shape, a1 + c1);
  const BoxDims box(2 * a1, 2 * b1, 2 * c1);
  r.formula = class_count_formula(SymmetryClass(5), box);
  r.enumerated = count_class(SymmetryClass(5), box);
  return r;
}

bool verify_s2(int a1, int b1, int m) {
  MultivariatePolynomial lhs(m);
  for (const auto& shape : sc_shapes(a1, b1)) lhs += schur_sum(shape, m);
  const auto rect = schur_sum(Partition(std::vector<int>(a1, b1)), m);
  return lhs == rect * rect;
}

std::string format_tableau(const SemistandardTableau& t) {
  std::ostringstream out;
  for (const auto& row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace ppwb
