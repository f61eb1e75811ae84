#pragma once

// Exact dense linear algebra over Z and Q.

#include "nadyn/field.hpp"

#include <vector>

namespace nadyn {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Scalar>>;

/// Fraction-free Gaussian elimination (Bareiss). Square input.
Integer determinant(IntMatrix m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(RatMatrix m);

/// Coefficients c_0..c_n of det(t I - m), c_n = 1.
std::vector<Integer> charpoly(const IntMatrix& m);

}  // namespace nadyn
