#pragma once

#include <optional>
#include <vector>

#include "crys/matrix.hpp"

namespace crys {

// Exact linear algebra over the rationals (fields get Gaussian
// elimination; Smith form is reserved for the Euclidean domains).

std::size_t rank(const RatMat& a);

std::optional<RatMat> inverse(const RatMat& a);

/// One solution of A x = b over Q (free variables set to 0), if consistent.
std::optional<std::vector<Rat>> solve_rational(const RatMat& a, const std::vector<Rat>& b);

/// Basis of the rational kernel {x : A x = 0}.
std::vector<std::vector<Rat>> kernel_rational(const RatMat& a);

Int det(const IntMat& a);

}  // namespace crys
