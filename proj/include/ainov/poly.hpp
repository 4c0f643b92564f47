#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ainov/rational.hpp"

namespace ainov {

using VarId = std::uint32_t;

/// Process-wide interner for deformation-variable names. Interning the same
/// name twice returns the same id, so symbolic runs are reproducible as long
/// as variables are created in a deterministic order (they are: basis order).
class VarPool {
public:
    static VarId intern(const std::string& name);
    static const std::string& name(VarId id);
};

/// Monomial in deformation variables: sorted (var, exponent>0) pairs.
struct Monomial {
    std::vector<std::pair<VarId, unsigned>> factors;

    bool operator==(const Monomial& o) const { return factors == o.factors; }
    bool operator<(const Monomial& o) const;
    int total_degree() const;
    static Monomial one() { return {}; }
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over exact rationals.
class Poly {
public:
    Poly() = default;
    static Poly constant(const Rat& c);
    static Poly variable(VarId v);
    static Poly variable(const std::string& name) { return variable(VarPool::intern(name)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; throws if the polynomial has a variable term.
    Rat constant_value() const;
    int total_degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly a, const Rat& c) { a *= c; return a; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    /// Substitute rationals for variables; unbound variables stay symbolic.
    Poly eval(const std::map<VarId, Rat>& assignment) const;

    /// Variables occurring in the polynomial, sorted.
    std::vector<VarId> variables() const;

    /// Views the polynomial as univariate in `v`: coefficients of v^0, v^1, ...
    /// Throws if any other variable occurs.
    std::vector<Rat> univariate_coefficients(VarId v) const;

    std::string to_string() const;

    const std::map<Monomial, Rat>& terms() const { return terms_; }

private:
    void prune(const Monomial& m);
    std::map<Monomial, Rat> terms_;
};

}  // namespace ainov
