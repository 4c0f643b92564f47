#pragma once

#include "ainov/ainfty.hpp"

namespace ainov {

/// Graded bilinear form Q of total degree −n with the graded antisymmetry
/// Q(x,y) = (−1)^{(deg x+1)(deg y+1)+1} Q(y,x). set_entry installs the
/// flipped entry with that sign automatically, so the invariant holds by
/// construction; check_cyclicity re-verifies it anyway.
class CyclicPairing {
public:
    CyclicPairing(ModulePtr module, int n, const Rat& cutoff);

    const ModulePtr& module() const { return module_; }
    int n() const { return n_; }
    const Rat& cutoff() const { return cutoff_; }
    const std::map<std::pair<LabelId, LabelId>, Nov>& entries() const { return entries_; }

    void set_entry(LabelId x, LabelId y, const Nov& value);
    void set_entry(LabelId x, LabelId y, const Rat& value);
    Nov entry(LabelId x, LabelId y) const;

    /// Q(a, b) for sparse elements.
    Nov pair(const Element& a, const Element& b) const;

    /// Labels y with Q(x, y) ≠ 0.
    std::vector<LabelId> partners(LabelId x) const;

    /// Exact nondegeneracy of every degree pairing block A^d × A^{n−d}.
    /// Requires constant (rational) entries. Returns the offending degree on
    /// failure via `witness_degree`.
    bool is_nondegenerate(int* witness_degree = nullptr) const;

    /// The d × (n−d) pairing block as a rational matrix (rows: A^d basis,
    /// columns: A^{n−d} basis). Requires constant entries.
    std::vector<std::vector<Rat>> block(int degree) const;

    bool operator==(const CyclicPairing& o) const;

private:
    static int flip_sign(int deg_x, int deg_y);

    ModulePtr module_;
    int n_;
    Rat cutoff_;
    std::map<std::pair<LabelId, LabelId>, Nov> entries_;
};

struct CyclicStructure {
    AInftyStructure S;
    CyclicPairing Q;
};

enum class CyclicityKind { antisymmetry, rotation, degree };

struct CyclicityViolation {
    CyclicityKind kind;
    int k;                       // arity for rotation violations, -1 otherwise
    std::vector<LabelId> word;   // rotation: (x₀, x₁, …, x_k); otherwise the pair
    Nov lhs;
    Nov rhs_with_sign;
};

/// Checks both bullet conditions of the n-cyclic definition up to arity K mod
/// T^energy: graded antisymmetry of Q and rotation invariance
/// Q(m_k(x₁..x_k),x₀) = (−1)^* Q(m_k(x₀..x_{k−1}),x_k) with the displayed *.
std::vector<CyclicityViolation> check_cyclicity(const AInftyStructure& S, const CyclicPairing& Q,
                                                int K, const Rat& energy);
std::vector<CyclicityViolation> check_cyclicity(const CyclicStructure& CS);

/// Σ_{k₁+k₂=k+1} Q(m_{k₁}(x^{⊗k₁}), m_{k₂}(x^{⊗k₂})), truncated. Vanishes
/// whenever relations and cyclicity hold; x must be degree 1 in Λ⁺.
Nov lemma_sum(const AInftyStructure& S, const CyclicPairing& Q, const Element& x, int k);

/// Q(κ(x),κ(x)) − Q(m₀(1),m₀(1)). Zero for every valid 4-cyclic structure.
/// Throws unless n = 4 (for other n the degree-2 pairing vanishes by grading,
/// which would silently report −Q(m₀,m₀); that misuse is rejected instead).
Nov darboux_defect(const AInftyStructure& S, const CyclicPairing& Q, const Element& x);

struct CompletionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The constructed completion failed its own relation/cyclicity verification:
/// a sign-convention incident rather than bad input.
struct CompletionVerificationError : CompletionError {
    using CompletionError::CompletionError;
};

/// Cyclic completion C^p = B^p ⊕ (B^{n−p})^∨ with the hyperbolic evaluation
/// pairing. Structure maps: m^B on B-only inputs; with exactly one dual input
/// the output is fixed by Q-adjunction through the rotation sign; two or more
/// dual inputs map to zero. The result is run through check_relations and
/// check_cyclicity; any violation raises CompletionError (the signs are the
/// paper's, never silently swapped for an alternative convention).
/// Dual basis labels are the originals with a "*" suffix; a collision with an
/// existing label is an error.
CyclicStructure cyclic_completion(const AInftyStructure& B, int n);

/// Multiplication table of a graded-commutative unital algebra, used to
/// generate strict cyclic structures. Products not listed are zero.
struct FrobeniusTable {
    std::vector<std::pair<std::string, int>> basis;  // label, degree
    std::string unit;
    std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, Rat>>> products;
};

struct FrobeniusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Strict cyclic structure from a Frobenius algebra: m₂ is the multiplication
/// twisted by the Koszul factor (−1)^{deg x (deg y+1)} that matches the
/// relation and rotation sign conventions simultaneously, and Q(x,y) is the
/// coefficient of the (unique) top-degree class in x·y. Associativity, graded
/// commutativity, unitality and trace nondegeneracy are all validated with
/// witnesses; the output additionally passes both checkers by construction
/// (and the constructor verifies that).
CyclicStructure frobenius_cyclic(const FrobeniusTable& table, int n, const Cutoffs& cutoffs);

/// Graded module with Betti ranks b₀..b₄ and the degree-wise Poincaré pairing
/// for n = 4: identity on the 0–4 block, the given symmetric intersection
/// form on degree 2 and the given matrix on the 1–3 block (its flip sign is
/// forced by the antisymmetry formula). Requires b₀=b₄, b₁=b₃ and
/// nondegenerate blocks.
std::pair<ModulePtr, CyclicPairing> poincare_model(const std::array<int, 5>& betti,
                                                   const std::vector<std::vector<Rat>>& intersection_form,
                                                   const std::vector<std::vector<Rat>>& deg13_pairing,
                                                   const Rat& cutoff);

}  // namespace ainov
