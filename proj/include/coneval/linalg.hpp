#pragma once

#include <optional>

#include "coneval/rational.hpp"

namespace coneval {

// v / gcd(entries), keeping the direction. Errors on the zero vector.
IntVec primitive_vector(const IntVec& v);

// Clears denominators of a nonzero rational vector and reduces to a primitive
// integer vector pointing the same way.
IntVec primitive_direction(const RatVec& v);

// Exact determinant of a square matrix (rational Gaussian elimination).
Rational determinant(const RatMat& m);

std::size_t rank(const RatMat& m);

// Unique exact solution of M x = b. Returns nullopt when the system is
// inconsistent; throws when it is consistent but underdetermined.
std::optional<RatVec> solve_exact(const RatMat& m, const RatVec& b);

// Basis of { x : M x = 0 }.
std::vector<RatVec> nullspace(const RatMat& m);

RatMat transpose(const RatMat& m);
RatMat matmul(const RatMat& a, const RatMat& b);

}  // namespace coneval
