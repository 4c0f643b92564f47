#pragma once

#include "ainov/graded.hpp"

namespace ainov {

/// Session truncation parameters: operations are stored for arities
/// 0..max_arity and all scalars live mod T^energy. Every verification in the
/// library is a statement "up to (max_arity, energy)" and reports stamp them.
struct Cutoffs {
    int max_arity{0};
    Rat energy;

    Cutoffs() : energy(1) {}
    Cutoffs(int k, const Rat& e) : max_arity(k), energy(e) {
        if (k < 0) throw std::invalid_argument("negative arity cutoff");
        if (e <= 0) throw std::invalid_argument("energy cutoff must be positive");
    }
    bool operator==(const Cutoffs& o) const = default;
};

struct RelationViolation {
    int k;                        // which A∞ relation
    std::vector<LabelId> inputs;  // basis multi-index
    Element residual;             // nonzero signed double sum, mod the test energy
};

/// Curved A∞ structure: graded maps m_k of degree 2−k on a fixed module,
/// stored sparsely per arity. m₀'s structure constants must lie in Λ⁺ so the
/// curvature m₀(1) sits in Λ⁺ ⊗ A² and Maurer-Cartan theory is well posed;
/// higher operations may carry valuation-0 constants (classical products).
class AInftyStructure {
public:
    AInftyStructure(ModulePtr module, const Cutoffs& cutoffs);

    const ModulePtr& module() const { return module_; }
    const Cutoffs& cutoffs() const { return cutoffs_; }
    const std::map<int, MultilinearMap>& ops() const { return ops_; }

    bool has_op(int arity) const { return ops_.count(arity) != 0; }
    const MultilinearMap& op(int arity) const;
    /// Installs m_k. Requires arity ≤ max_arity, degree shift 2−k, matching
    /// cutoff, and Λ⁺ constants when k = 0.
    void set_op(int arity, MultilinearMap m);
    /// Mutable access for incremental construction; creates an empty map.
    MultilinearMap& op_mut(int arity);

    /// m₀(1); the zero element iff the structure is strict.
    Element curvature() const;
    bool is_strict() const { return curvature().is_zero(); }

    bool operator==(const AInftyStructure& o) const;

private:
    ModulePtr module_;
    Cutoffs cutoffs_;
    std::map<int, MultilinearMap> ops_;
};

/// Checks the A∞ relations Σ(−1)^{…} m_{k₁}(…, m_{k₂}(…), …) = 0 for all
/// 0 ≤ k ≤ K on all basis multi-indices, mod T^energy. Signs come from
/// insertion_sign. Returns the (canonically sorted) nonzero residuals.
/// Throws when (K, energy) exceed the stored cutoffs.
std::vector<RelationViolation> check_relations(const AInftyStructure& S, int K, const Rat& energy);

/// Convenience overload at the structure's own cutoffs.
std::vector<RelationViolation> check_relations(const AInftyStructure& S);

/// Kuranishi map κ(x) = Σ_k m_k(x,…,x), truncated at the structure's cutoffs.
/// x must be homogeneous of degree 1 with all coefficients in Λ⁺.
Element kuranishi_eval(const AInftyStructure& S, const Element& x);

/// One formal coordinate of a symbolic degree-1 point: the basis direction it
/// multiplies, the deformation-variable name, and its formal energy weight
/// T^ε (ε > 0, so the expansion stays inside Λ⁺).
struct SymbolicDirection {
    LabelId direction;
    std::string var;
    Rat weight;
};

/// The symbolic point x = Σ var·T^ε·u over the given directions.
Element symbolic_point(const AInftyStructure& S, const std::vector<SymbolicDirection>& dirs);

/// Directions covering every degree-1 basis label with variable "c_<label>"
/// and a uniform weight (default energy/(max_arity+1), which prunes nothing
/// below the arity cutoff).
std::vector<SymbolicDirection> default_symbolic_directions(const AInftyStructure& S);
std::vector<SymbolicDirection> default_symbolic_directions(const AInftyStructure& S,
                                                           const Rat& weight);

/// κ expanded with coefficients in ℚ[vars]: identically zero iff every
/// polynomial coefficient vanishes. Every degree-1 direction must be covered
/// by exactly one variable.
Element kuranishi_symbolic(const AInftyStructure& S, const std::vector<SymbolicDirection>& dirs);

/// Twisted structure m_k^b(x₁,…,x_k) = Σ_n m_n(b,…,b,x₁,b,…,x_k,b,…,b),
/// truncated at the structure's cutoffs. b must be degree 1 with Λ⁺
/// coefficients; insertions of a degree-1 element carry no Koszul signs.
/// The result's curvature equals kuranishi_eval(S, b).
AInftyStructure twist(const AInftyStructure& S, const Element& b);

}  // namespace ainov
