#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ppwb/bigint.hpp"

namespace ppwb {

/// Polynomial in q with arbitrary-precision integer coefficients; index d
/// holds the coefficient of q^d. No trailing zeros are stored, so the zero
/// polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long constant);  // NOLINT: integers promote to constants
  QPolynomial(const BigInt& constant);  // NOLINT
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial monomial(int degree, const BigInt& coeff = 1);
  /// 1 - q^k
  static QPolynomial one_minus_q_power(int k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int d) const;
  BigInt evaluate(const BigInt& q) const;
  BigInt at_one() const;
  QPolynomial truncated(int max_degree) const;
  QPolynomial shifted(int k) const;  // times q^k

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  QPolynomial operator-() const;
  bool operator==(const QPolynomial&) const = default;

  /// Exact division; throws NonPolynomialQuotient when the remainder is
  /// nonzero or a coefficient division is inexact.
  QPolynomial divided_exactly_by(const QPolynomial& d) const;
  /// Quotient and remainder of long division. Throws NonPolynomialQuotient
  /// if a leading coefficient does not divide over the integers.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& d) const;

  /// Multiplies by 1/(1 - q^k) as a power series, keeping degrees <= max_degree.
  QPolynomial times_geometric(int k, int max_degree) const;

  /// "1 + q + 3*q^2" style, ascending degree; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// Ring hooks for bareiss_determinant.
inline bool is_zero(const QPolynomial& p) { return p.is_zero(); }
inline QPolynomial exact_div(const QPolynomial& a, const QPolynomial& b) { return a.divided_exactly_by(b); }

/// prod(1 - q^x for x in numerator) / prod(1 - q^y for y in denominator).
struct RatioProduct {
  std::vector<int> numerator;
  std::vector<int> denominator;

  void add(int num_exp, int den_exp) {
    numerator.push_back(num_exp);
    denominator.push_back(den_exp);
  }
};

/// Multiplies out the numerator and divides by each denominator factor with
/// a remainder check. Throws NonPolynomialQuotient if the quotient is not a
/// polynomial. Exponents must be positive.
QPolynomial ratio_to_polynomial(const RatioProduct& r);

/// The value at q = 1 of the same ratio, as an exact rational limit
/// prod(x)/prod(y); used as an independent route for counts.
BigRational ratio_limit_at_one(const RatioProduct& r);

}  // namespace ppwb
