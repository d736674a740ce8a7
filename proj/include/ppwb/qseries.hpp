#pragma once

#include "ppwb/bigint.hpp"
#include "ppwb/core.hpp"
#include "ppwb/qpoly.hpp"
#include "ppwb/symmetry.hpp"

namespace ppwb {

/// prod over the box cells (i,j,k) of (1-q^{i+j+k-1})/(1-q^{i+j+k-2}).
RatioProduct box_ratio(const BoxDims& box);
QPolynomial box_gf(const BoxDims& box);
/// Same product at q = 1, accumulated as an exact rational.
BigInt box_count(const BoxDims& box);

/// prod_{i>=1} (1-q^i)^{-i} truncated at q^n.
QPolynomial all_pp_series(int n);

/// Product side of the generating functions for classes 1-4. Supported
/// pairings: class 1 with Size; class 2 with Size or HalfSize (box a x a x c);
/// class 3 with Size (a-cube); class 4 with Orbit or HalfSize (a-cube; both
/// give the same product). Throws InvalidArgument for other pairings and
/// InvalidDims when the box does not fit the class.
RatioProduct class_ratio(SymmetryClass cls, const BoxDims& box, Weight weight);
QPolynomial class_gf_formula(SymmetryClass cls, const BoxDims& box, Weight weight);

/// Closed-form number of class members in the given box, for every class.
/// Classes 5-10 need the box shapes their formulas cover (even height for
/// 5 and 6, a x a x 2c for 7, even cubes for 8-10) and throw InvalidDims
/// otherwise.
BigInt class_count_formula(SymmetryClass cls, const BoxDims& box);

/// Factorial products for the 2a-cube.
BigInt cstc_count(int a);   // class 8
BigInt cssc_count(int a);   // class 9
BigInt tsscpp_count(int a); // class 10

/// Transpose-complementary count for the a x a x 2c box.
BigInt tc_count(int a, int c);

/// N9(2a,2a,2a) == N10(2a,2a,2a)^2 from the closed forms.
bool verify_c9c10(int a);

}  // namespace ppwb
