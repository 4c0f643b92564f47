#pragma once

#include "ainov/cyclic.hpp"

namespace ainov {
namespace models {

/// Multiplication table of the exterior algebra on `generators` degree-1
/// generators (the H*(T^k) model). Labels: "1", "e1", "e12", ..., products
/// are wedge products with the usual permutation signs.
FrobeniusTable exterior_algebra(int generators);

/// Table with b₁ = b₃ = odd_rank degree-1/3 classes pairing identically and a
/// degree-2 block multiplying by the given symmetric Gram matrix into the
/// point class: aᵢ·cⱼ = δᵢⱼ·pt, hᵢ·hⱼ = gram[i][j]·pt, all other nontrivial
/// products zero. Definite gram matrices give the definite models of the
/// unobstructedness suite.
FrobeniusTable graded_surface_like(int odd_rank, const std::vector<std::vector<Rat>>& gram);

/// The curved two-dimensional toy: basis u (degree 1), v (degree 2),
/// m₀(1) = T·v, m₂(u,u) = −v. Kuranishi map κ(c·T^{1/2}u) = (1−c²)·T·v.
AInftyStructure uv_toy(const Cutoffs& cutoffs);

/// Strict toy with a differential: u (degree 1), v (degree 2), m₁(u) = T·v.
AInftyStructure differential_toy(const Cutoffs& cutoffs);

/// One-generator exterior algebra as a bare A∞ structure (input to
/// completion tests): basis 1 (degree 0), e (degree 1), m₂ from the wedge.
AInftyStructure exterior_one_generator(const Cutoffs& cutoffs);

/// Rank-1 unital algebra concentrated in degree 0.
AInftyStructure unital_point(const Cutoffs& cutoffs);

}  // namespace models
}  // namespace ainov
