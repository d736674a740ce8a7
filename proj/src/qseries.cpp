#include "ppwb/qseries.hpp"

#include <utility>

#include "ppwb/error.hpp"

namespace ppwb {

RatioProduct box_ratio(const BoxDims& box) {
  RatioProduct r;
  for (int i = 1; i <= box.a; ++i)
    for (int j = 1; j <= box.b; ++j)
      for (int k = 1; k <= box.c; ++k) r.add(i + j + k - 1, i + j + k - 2);
  return r;
}

QPolynomial box_gf(const BoxDims& box) { return ratio_to_polynomial(box_ratio(box)); }

BigInt box_count(const BoxDims& box) {
  BigRational r = ratio_limit_at_one(box_ratio(box));
  if (r.get_den() != 1) throw InvalidArgument("box count is not integral");
  return r.get_num();
}

QPolynomial all_pp_series(int n) {
  QPolynomial s(1L);
  for (int i = 1; i <= n; ++i)
    for (int rep = 0; rep < i; ++rep) s = s.times_geometric(i, n);
  return s;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidDims(what);
}

}  // namespace

RatioProduct class_ratio(SymmetryClass cls, const BoxDims& box, Weight weight) {
  const int a = box.a;
  const int c = box.c;
  RatioProduct r;
  switch (cls.id()) {
    case 1:
      if (weight != Weight::Size) break;
      return box_ratio(box);
    case 2:
      require(box.a == box.b, "class 2 needs an a x a x c box");
      if (weight == Weight::Size) {
        for (int i = 1; i <= a; ++i) r.add(c + 2 * i - 1, 2 * i - 1);
        for (int i = 1; i <= a; ++i)
          for (int j = i + 1; j <= a; ++j) r.add(2 * (c + i + j - 1), 2 * (i + j - 1));
        return r;
      }
      if (weight == Weight::HalfSize) {
        for (int i = 1; i <= a; ++i)
          for (int j = i; j <= a; ++j) r.add(c + i + j - 1, i + j - 1);
        return r;
      }
      break;
    case 3:
      require(box.a == box.b && box.b == box.c, "class 3 needs a cube");
      if (weight != Weight::Size) break;
      for (int i = 1; i <= a; ++i) r.add(3 * i - 1, 3 * i - 2);
      for (int i = 1; i <= a; ++i)
        for (int j = i + 1; j <= a; ++j) r.add(3 * (2 * i + j - 1), 3 * (2 * i + j - 2));
      // i below both j and k.
      for (int i = 1; i <= a; ++i)
        for (int j = i + 1; j <= a; ++j)
          for (int k = i + 1; k <= a; ++k) r.add(3 * (i + j + k - 1), 3 * (i + j + k - 2));
      return r;
    case 4:
      require(box.a == box.b && box.b == box.c, "class 4 needs a cube");
      if (weight == Weight::Size) break;
      for (int i = 1; i <= a; ++i)
        for (int j = i; j <= a; ++j)
          for (int k = j; k <= a; ++k) r.add(i + j + k - 1, i + j + k - 2);
      return r;
    default:
      break;
  }
  throw InvalidArgument("no product formula for class " + std::to_string(cls.id()) + " with weight " +
                        to_string(weight));
}

QPolynomial class_gf_formula(SymmetryClass cls, const BoxDims& box, Weight weight) {
  return ratio_to_polynomial(class_ratio(cls, box, weight));
}

BigInt cstc_count(int a) {
  require(a >= 1, "a must be positive");
  BigRational r(1);
  for (int i = 0; i < a; ++i)
    r *= BigRational(BigInt(3 * i + 1) * factorial(6 * i) * factorial(2 * i),
                     factorial(4 * i + 1) * factorial(4 * i));
  r.canonicalize();
  return r.get_num();
}

BigInt cssc_count(int a) {
  require(a >= 1, "a must be positive");
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < a; ++i) {
    BigInt f = factorial(3 * i + 1);
    BigInt g = factorial(a + i);
    num *= f * f;
    den *= g * g;
  }
  return exact_div(num, den);
}

BigInt tsscpp_count(int a) {
  require(a >= 1, "a must be positive");
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < a; ++i) {
    num *= factorial(3 * i + 1);
    den *= factorial(a + i);
  }
  return exact_div(num, den);
}

BigInt tc_count(int a, int c) {
  require(a >= 1 && c >= 0, "a must be positive and c non-negative");
  BigRational r(binomial(c + a - 1, a - 1));
  for (int i = 1; i <= a - 2; ++i)
    for (int j = i; j <= a - 2; ++j) r *= BigRational(2 * c + i + j + 1, i + j + 1);
  r.canonicalize();
  return r.get_num();
}

namespace {

// A box with a zero side holds only the empty plane partition.
BigInt side_count(int a, int b, int c) { return a == 0 || b == 0 ? BigInt(1) : box_count({a, b, c}); }

}  // namespace

bool verify_c9c10(int a) {
  BigInt n10 = tsscpp_count(a);
  return cssc_count(a) == n10 * n10;
}

BigInt class_count_formula(SymmetryClass cls, const BoxDims& box) {
  const int a = box.a;
  const int b = box.b;
  const int c = box.c;
  switch (cls.id()) {
    case 1:
      return box_count(box);
    case 2:
    case 3:
      return class_gf_formula(cls, box, Weight::Size).at_one();
    case 4:
      return class_gf_formula(cls, box, Weight::Orbit).at_one();
    case 5: {
      require(c % 2 == 0 || a % 2 == 0 || b % 2 == 0, "class 5 is empty when a, b and c are all odd");
      // The formulas put the even side last; the count is symmetric in the sides.
      int s[3] = {a, b, c};
      if (c % 2 != 0) std::swap(s[2], s[a % 2 == 0 ? 0 : 1]);
      const int x = s[0];
      const int y = s[1];
      const int z = s[2] / 2;
      if (x % 2 == 0 && y % 2 == 0) {
        BigInt n = side_count(x / 2, y / 2, z);
        return n * n;
      }
      if (x % 2 == 1 && y % 2 == 0) return side_count(x / 2, y / 2, z) * side_count(x / 2 + 1, y / 2, z);
      if (x % 2 == 0 && y % 2 == 1) return side_count(y / 2, x / 2, z) * side_count(y / 2 + 1, x / 2, z);
      return side_count(x / 2 + 1, y / 2, z) * side_count(x / 2, y / 2 + 1, z);
    }
    case 6:
      require(a == b && c % 2 == 0, "class 6 formula needs an a x a x 2c box");
      return tc_count(a, c / 2);
    case 7:
      require(a == b && c % 2 == 0, "class 7 formula needs an a x a x 2c box");
      if (a % 2 == 0) return side_count(a / 2, a / 2, c / 2);
      return side_count(a / 2 + 1, a / 2, c / 2);
    case 8:
    case 9:
    case 10:
      require(a == b && b == c && a % 2 == 0, "classes 8-10 need a 2a x 2a x 2a box");
      if (cls.id() == 8) return cstc_count(a / 2);
      if (cls.id() == 9) return cssc_count(a / 2);
      return tsscpp_count(a / 2);
    default:
      break;
  }
  throw InvalidArgument("unknown class");
}

}  // namespace ppwb
