#pragma once

#include <optional>
#include <vector>

#include "ainov/rational.hpp"

namespace ainov {

/// Dense exact rational matrices, row major. Small sizes only; everything is
/// plain Gaussian elimination over ℚ.
using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

int matrix_rank(RatMatrix m);
Rat matrix_det(RatMatrix m);
bool is_symmetric(const RatMatrix& m);

/// A particular solution of A·x = b with free variables set to zero, or
/// nullopt when b is outside the column space.
std::optional<RatVector> solve_linear(const RatMatrix& A, const RatVector& b);

/// Sylvester test on leading principal minors: +1 positive definite,
/// -1 negative definite, 0 otherwise. The empty matrix counts as definite
/// (+1): pairings with an empty degree block are vacuously definite.
int definiteness(const RatMatrix& m);

Rat quadratic_form(const RatMatrix& m, const RatVector& v);

}  // namespace ainov
