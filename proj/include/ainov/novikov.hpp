#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ainov/poly.hpp"
#include "ainov/rational.hpp"

namespace ainov {

struct CutoffMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One monomial a·T^λ·e^n of a truncated Novikov scalar. The coefficient is a
/// polynomial over ℚ in deformation variables; plain rationals are the
/// constant case.
struct NovTerm {
    Rat lambda;   // energy exponent, 0 ≤ lambda < cutoff
    int epow{0};  // power of the formal degree-0 unit e
    Poly coeff;
};

/// Element of the universal Novikov ring truncated at a fixed energy cutoff E:
/// sums Σ aᵢ T^{λᵢ} e^{nᵢ} with λᵢ ∈ ℚ≥0, kept normalized (terms sorted by
/// (λ, e), like terms merged, zero coefficients and terms with λ ≥ E dropped).
/// All arithmetic is exact; mixing cutoffs throws CutoffMismatch.
class Nov {
public:
    explicit Nov(const Rat& cutoff);

    static Nov zero(const Rat& cutoff) { return Nov(cutoff); }
    static Nov constant(const Rat& c, const Rat& cutoff);
    static Nov monomial(const Poly& coeff, const Rat& lambda, int epow, const Rat& cutoff);
    static Nov monomial(const Rat& coeff, const Rat& lambda, int epow, const Rat& cutoff) {
        return monomial(Poly::constant(coeff), lambda, epow, cutoff);
    }

    const Rat& cutoff() const { return cutoff_; }
    const std::vector<NovTerm>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// True when every term vanishes mod T^energy (i.e. all λ ≥ energy).
    bool is_zero_mod(const Rat& energy) const;

    /// Minimum energy exponent over nonzero terms; nullopt (+∞) for zero.
    std::optional<Rat> valuation() const;
    /// Membership in the maximal ideal Λ⁺: every term has λ > 0.
    bool is_plus() const;
    /// Term minimal in lex order (λ ascending, then e ascending). Throws on zero.
    const NovTerm& leading_term() const;

    /// True when all coefficients are constant polynomials.
    bool is_constant_coefficients() const;

    Nov operator-() const;
    Nov& operator+=(const Nov& o);
    Nov& operator-=(const Nov& o);
    friend Nov operator+(Nov a, const Nov& b) { a += b; return a; }
    friend Nov operator-(Nov a, const Nov& b) { a -= b; return a; }
    friend Nov operator*(const Nov& a, const Nov& b);
    Nov& operator*=(const Rat& c);
    Nov& operator*=(const Poly& c);
    friend Nov operator*(Nov a, const Rat& c) { a *= c; return a; }

    bool operator==(const Nov& o) const { return cutoff_ == o.cutoff_ && terms_ == o.terms_; }

    /// Substitute rationals for deformation variables.
    Nov eval(const std::map<VarId, Rat>& assignment) const;

    /// Re-truncate to a smaller (or equal) cutoff.
    Nov truncated(const Rat& new_cutoff) const;

    /// Canonical textual form "a*T^(p/q)*e^n + ..."; parses back bit-exactly.
    std::string to_string() const;
    /// Parse the numeric (constant-coefficient) scalar grammar. Throws
    /// std::invalid_argument with a description on malformed input.
    static Nov parse(const std::string& text, const Rat& cutoff);

private:
    void add_term(const Rat& lambda, int epow, const Poly& coeff);
    void require_same_cutoff(const Nov& o) const;

    Rat cutoff_;
    std::vector<NovTerm> terms_;
};

inline bool operator==(const NovTerm& a, const NovTerm& b) {
    return a.lambda == b.lambda && a.epow == b.epow && a.coeff == b.coeff;
}

}  // namespace ainov
