#include "ppwb/mpoly.hpp"

#include <numeric>
#include <sstream>

#include "ppwb/error.hpp"

namespace ppwb {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

MultivariatePolynomial MultivariatePolynomial::constant(int nvars, const BigInt& c) {
  MultivariatePolynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultivariatePolynomial MultivariatePolynomial::monomial(const Exponent& e, const BigInt& c) {
  MultivariatePolynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

BigInt MultivariatePolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultivariatePolynomial::add_term(const Exponent& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != nvars_) throw DimensionMismatch("exponent vector has wrong length");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultivariatePolynomial MultivariatePolynomial::multiplied_truncated(const MultivariatePolynomial& o,
                                                                    int max_degree) const {
  if (o.nvars_ != nvars_) throw DimensionMismatch("polynomials in different numbers of variables");
  MultivariatePolynomial out(nvars_);
  Exponent e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      if (max_degree >= 0 && total_degree(e) > max_degree) continue;
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

MultivariatePolynomial MultivariatePolynomial::operator*(const MultivariatePolynomial& o) const {
  return multiplied_truncated(o, -1);
}

MultivariatePolynomial MultivariatePolynomial::times_geometric(const Exponent& m, int max_degree) const {
  const int dm = total_degree(m);
  if (dm <= 0) throw InvalidArgument("geometric factor needs a monomial of positive degree");
  MultivariatePolynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent cur = e;
    for (int d = total_degree(e); d <= max_degree; d += dm) {
      out.add_term(cur, c);
      for (int i = 0; i < nvars_; ++i) cur[i] += m[i];
    }
  }
  return out;
}

MultivariatePolynomial MultivariatePolynomial::truncated(int max_degree) const {
  MultivariatePolynomial out(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= max_degree) out.add_term(e, c);
  return out;
}

QPolynomial MultivariatePolynomial::principal_specialization() const {
  QPolynomial out;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i = 0; i < nvars_; ++i) d += (i + 1) * e[i];
    out += QPolynomial::monomial(d, c);
  }
  return out;
}

BigInt MultivariatePolynomial::at_all_ones() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

MultivariatePolynomial MultivariatePolynomial::with_swapped(int i, int j) const {
  MultivariatePolynomial out(nvars_);
  for (const auto& [exp, c] : terms_) {
    Exponent e = exp;
    std::swap(e[i], e[j]);
    out.add_term(e, c);
  }
  return out;
}

std::string MultivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const BigInt mag = abs(c);
    bool constant = total_degree(e) == 0;
    if (mag != 1 || constant) out << mag.get_str();
    bool need_star = mag != 1;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << '*';
      need_star = true;
      out << 'x' << i + 1;
      if (e[i] > 1) out << '^' << e[i];
    }
  }
  return out.str();
}

}  // namespace ppwb
