#pragma once

#include <cstdint>
#include <variant>

#include "ainov/cyclic.hpp"
#include "ainov/linalg.hpp"

namespace ainov {

struct MCSolution {
    Element b;
};
struct MCObstruction {
    Rat energy;
    Element class_vector;  // degree-2 leading class that cannot be absorbed
};
struct MCExhausted {
    std::string description;
};
using MCResult = std::variant<MCSolution, MCObstruction, MCExhausted>;

/// Method limitation of newton mode (m₁'s valuation-0 part cannot cover any
/// residual). Not an obstruction claim.
struct LinearizationNotSurjective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// κ(b) = 0 mod T^energy. b must be degree 1 with Λ⁺ coefficients.
bool mc_verify(const AInftyStructure& S, const Element& b, const Rat& energy);
bool mc_verify(const AInftyStructure& S, const Element& b);

/// Filtration-induction solver b ← b − G(κ(b)) where G is a right-inverse of
/// the valuation-0, e⁰ part of m₁ on its image. Residual layers outside the
/// image: LinearizationNotSurjective when that part of m₁ is zero (the method
/// cannot start), Obstruction with the first non-absorbable leading class
/// otherwise. Solutions are re-verified before being returned.
MCResult mc_solve_newton(const AInftyStructure& S, int max_steps = 4096);

/// Ansatz solver: expands κ(Σᵢ Σ_u c_{i,u} T^{λᵢ} u) symbolically over the
/// exponent grid and solves the triangular-by-energy system exactly, stage
/// degree ≤ 2 per unknown (positive quadratic root tried first, then the
/// negative: branches are explored in descending root order). Coupled
/// multivariate stages return Exhausted; a constant nonzero stage equation is
/// an Obstruction at its energy. Solutions are re-verified.
MCResult mc_solve_ansatz(const AInftyStructure& S, const std::vector<Rat>& grid);

struct IsotropyStep {
    Rat lambda;
    int epow{0};
    std::string note;
};

struct IsotropyCertificate {
    bool certified{false};
    std::vector<IsotropyStep> steps;
    std::string message;
};

/// Certifies v = 0 from Q(v,v) = 0 over a definite block, by induction on the
/// lex-leading (λ, e) term: the lowest layer w contributes Q_block(w,w) to the
/// lowest layer of Q(v,v), and definiteness forces w = 0. Throws
/// std::invalid_argument when the block is not definite or Q(v,v) ≠ 0
/// (rejected input); returns an uncertified report with the contradiction
/// witness if a nonzero leading layer survives (a theorem-violation incident).
IsotropyCertificate zero_from_isotropy(const RatMatrix& q_block,
                                       const std::vector<LabelId>& block_labels, const Element& v);

struct CertificateStep {
    std::string name;
    bool pass{false};
    std::string detail;
};

struct UnobstructednessReport {
    bool certified{false};
    Cutoffs cutoffs;
    Rat symbolic_weight;
    std::vector<CertificateStep> steps;
};

/// Machine check of the definite-unobstructedness theorem on a 4-cyclic
/// structure with definite degree-2 pairing block and a verified
/// Maurer-Cartan point b:
///   (1) symbolic κ ≡ 0 mod the cutoffs, via Q(κ,κ) = Q(m₀,m₀) = Q(κ(b),κ(b))
///       = 0 and the isotropy certificate;
///   (2) for `samples` random b′ ∈ A¹⊗Λ⁺, the twisted κ^{b′} ≡ 0 by the same
///       chain applied to twist(S, b′).
/// Definiteness or mc_verify failures throw; any nonzero symbolic residual is
/// reported as an uncertified incident step.
UnobstructednessReport unobstructedness_certificate(const CyclicStructure& CS, const Element& b,
                                                    int samples, std::uint64_t seed);

}  // namespace ainov
