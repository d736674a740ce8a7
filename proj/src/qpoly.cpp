#include "ppwb/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "ppwb/error.hpp"

namespace ppwb {

QPolynomial::QPolynomial(long constant) : coeffs_{BigInt(constant)} { normalize(); }

QPolynomial::QPolynomial(const BigInt& constant) : coeffs_{constant} { normalize(); }

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPolynomial QPolynomial::monomial(int degree, const BigInt& coeff) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c[degree] = coeff;
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::one_minus_q_power(int k) {
  if (k <= 0) throw InvalidArgument("1 - q^k needs k >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
  c[0] = 1;
  c[k] = -1;
  return QPolynomial(std::move(c));
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coefficient(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[d];
}

BigInt QPolynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

BigInt QPolynomial::at_one() const {
  BigInt acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

QPolynomial QPolynomial::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  std::vector<BigInt> c(coeffs_.begin(), coeffs_.begin() + std::min<long>(coeffs_.size(), max_degree + 1L));
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(c));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& d) const {
  if (d.is_zero()) throw NonPolynomialQuotient("division by the zero polynomial");
  std::vector<BigInt> rem = coeffs_;
  const int dd = d.degree();
  const BigInt& lead = d.coeffs_.back();
  std::vector<BigInt> quot(rem.size() >= d.coeffs_.size() ? rem.size() - d.coeffs_.size() + 1 : 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (sgn(rem[k]) == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t()))
      throw NonPolynomialQuotient("leading coefficient does not divide over the integers");
    BigInt f = exact_div(rem[k], lead);
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.coeffs_[j];
    quot[k - dd] = f;
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial QPolynomial::divided_exactly_by(const QPolynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero())
    throw NonPolynomialQuotient("nonzero remainder " + r.to_string() + " dividing by " + d.to_string());
  return q;
}

QPolynomial QPolynomial::times_geometric(int k, int max_degree) const {
  if (k <= 0) throw InvalidArgument("geometric factor needs k >= 1");
  std::vector<BigInt> out(static_cast<std::size_t>(std::max(max_degree + 1, 0)));
  for (int d = 0; d <= max_degree; ++d) {
    out[d] = coefficient(d);
    if (d >= k) out[d] += out[d - k];
  }
  return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const BigInt& c = coeffs_[d];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'q';
    if (d > 1) out << '^' << d;
  }
  return out.str();
}

QPolynomial ratio_to_polynomial(const RatioProduct& r) {
  QPolynomial p(1L);
  for (int x : r.numerator) p *= QPolynomial::one_minus_q_power(x);
  for (int y : r.denominator) p = p.divided_exactly_by(QPolynomial::one_minus_q_power(y));
  return p;
}

BigRational ratio_limit_at_one(const RatioProduct& r) {
  BigInt num = 1;
  BigInt den = 1;
  for (int x : r.numerator) num *= x;
  for (int y : r.denominator) den *= y;
  if (r.numerator.size() != r.denominator.size())
    throw InvalidArgument("q -> 1 limit needs as many numerator as denominator factors");
  BigRational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace ppwb
