#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppwb/bigint.hpp"
#include "ppwb/qpoly.hpp"

namespace ppwb {

using Exponent = std::vector<int>;

/// Polynomial in a fixed number of variables x_1..x_n with integer
/// coefficients, stored as exponent vector -> coefficient with no zero
/// coefficients kept.
class MultivariatePolynomial {
 public:
  explicit MultivariatePolynomial(int nvars = 0) : nvars_(nvars) {}

  static MultivariatePolynomial constant(int nvars, const BigInt& c);
  static MultivariatePolynomial monomial(const Exponent& e, const BigInt& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const BigInt& c);
  MultivariatePolynomial& operator+=(const MultivariatePolynomial& o);
  friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) {
    return a += b;
  }
  MultivariatePolynomial operator*(const MultivariatePolynomial& o) const;
  /// Product with all terms of total degree > max_degree dropped.
  MultivariatePolynomial multiplied_truncated(const MultivariatePolynomial& o, int max_degree) const;
  /// Times 1/(1 - m) as a series, for a monomial m of positive degree,
  /// keeping total degree <= max_degree.
  MultivariatePolynomial times_geometric(const Exponent& m, int max_degree) const;
  MultivariatePolynomial truncated(int max_degree) const;

  /// Substitutes x_i = q^i (i = 1..n).
  QPolynomial principal_specialization() const;
  BigInt at_all_ones() const;
  /// Swaps variables i and j (0-based).
  MultivariatePolynomial with_swapped(int i, int j) const;

  bool operator==(const MultivariatePolynomial&) const = default;
  std::string to_string() const;

 private:
  int nvars_;
  std::map<Exponent, BigInt> terms_;
};

int total_degree(const Exponent& e);

}  // namespace ppwb
