#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ppwb/bigint.hpp"

namespace ppwb {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free Gaussian elimination (Bareiss). The ring type needs
// is_zero(T) and exact_div(T, T) found by ADL or in this namespace; every
// division performed here is exact.
template <typename T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m[r][k])) ++r;
      if (r == n) return T(0);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(t, prev);
      }
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  if (negate) det = T(0) - det;
  return det;
}

}  // namespace ppwb
