#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "htype/matrix.hpp"

namespace htype {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major

RatMatrix to_rational(const IntMatrix& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

/// Basis of { x : A x = 0 } with a 1 in each free column.
std::vector<RatVector> nullspace(const RatMatrix& a, int cols);

/// Independent route: Bareiss elimination over BigInt, then rational
/// back-substitution per free column, scaled to primitive integer vectors.
std::vector<std::vector<BigInt>> nullspace_fraction_free(const IntMatrix& a);

}  // namespace htype
