#pragma once

#include <array>
#include <optional>

#include "ainov/linalg.hpp"

namespace ainov {

/// Element a + b·√d of the real quadratic extension ℚ(√d), d > 0 rational.
/// When d is a perfect square the √d part is folded into the rational part on
/// construction, so equality and inversion stay exact in every case. Mixing
/// different d values throws.
struct QScalar {
    Rat a, b, d;

    QScalar() : a(0), b(0), d(1) {}
    QScalar(Rat a_, Rat b_, Rat d_);
    static QScalar rational(const Rat& r) { return QScalar(r, Rat(0), Rat(1)); }
    static QScalar sqrt_d(const Rat& d) { return QScalar(Rat(0), Rat(1), d); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    QScalar operator-() const;
    friend QScalar operator+(const QScalar& x, const QScalar& y);
    friend QScalar operator-(const QScalar& x, const QScalar& y);
    friend QScalar operator*(const QScalar& x, const QScalar& y);
    QScalar inverse() const;
    friend QScalar operator/(const QScalar& x, const QScalar& y) { return x * y.inverse(); }
    bool operator==(const QScalar& o) const;

    double to_double() const;
    std::string to_string() const;
};

/// Positive definite rational metric on a 4-dimensional model space.
struct Metric4 {
    RatMatrix g;  // symmetric 4×4

    explicit Metric4(RatMatrix m);
    static Metric4 identity();
    RatMatrix inverse() const;
    Rat det() const;
};

/// Rational 2-form in the ordered basis e12, e13, e14, e23, e24, e34.
using TwoForm = std::array<Rat, 6>;
/// 2-form with coefficients in ℚ(√det g): the image of rational forms under
/// the Hodge star.
using QTwoForm = std::array<QScalar, 6>;

QTwoForm lift(const TwoForm& w, const Rat& d);

/// Star operator data for a fixed metric and orientation: *w = √det(g)·K·w
/// with K rational, so *∘* = det·K² = id holds exactly.
class StarContext {
public:
    StarContext(const Metric4& g, int orientation = 1);

    const Rat& det() const { return det_; }
    QTwoForm star(const QTwoForm& w) const;
    QTwoForm star(const TwoForm& w) const { return star(lift(w, det_)); }

    /// ⟨v,w⟩ in the metric induced on 2-forms.
    QScalar inner(const QTwoForm& v, const QTwoForm& w) const;
    QScalar norm2(const QTwoForm& w) const { return inner(w, w); }

    /// Dimensions of the ±1 eigenspaces of *, computed exactly.
    std::pair<int, int> eigenspace_dims() const;

private:
    Rat det_;
    RatMatrix K_;      // 6×6, *= √det·K
    RatMatrix lambda2_;  // induced metric on 2-forms
};

/// (*w)_{kl} = ½√det(g)·ε_{ijkl} g^{ii′}g^{jj′} w_{i′j′}.
QTwoForm hodge_star2(const Metric4& g, const TwoForm& w);

/// w = w⁺ + w⁻ with *w± = ±w±.
std::pair<QTwoForm, QTwoForm> sd_split(const Metric4& g, const TwoForm& w);

struct WedgeCheck {
    QScalar wedge_residual;   // (w∧w coefficient) − (|w⁺|²−|w⁻|²)·√det g
    QScalar energy_residual;  // |w|² − |w⁺|² − |w⁻|²
};

/// Both identities from the Lagrangian-converse proof, evaluated exactly.
WedgeCheck wedge_square_check(const Metric4& g, const TwoForm& w);

/// w∧w = wedge_square_coefficient(w)·e1∧e2∧e3∧e4.
QScalar wedge_square_coefficient(const QTwoForm& w);

// ---------------------------------------------------------------------------

/// Gaussian rational a + bi.
struct GaussRat {
    Rat re, im;
    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    friend GaussRat operator+(const GaussRat& x, const GaussRat& y) { return {x.re + y.re, x.im + y.im}; }
    friend GaussRat operator-(const GaussRat& x, const GaussRat& y) { return {x.re - y.re, x.im - y.im}; }
    friend GaussRat operator*(const GaussRat& x, const GaussRat& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
};

/// (0,2)-form on flat ℂ⁴ in the basis dz̄₁∧dz̄₂, dz̄₁∧dz̄₃, dz̄₁∧dz̄₄,
/// dz̄₂∧dz̄₃, dz̄₂∧dz̄₄, dz̄₃∧dz̄₄.
using Form02 = std::array<GaussRat, 6>;

/// *₄ = (Ω⌟)∘* on the flat model, normalized by ⟨Ω,Ω⟩ = 2⁴ so that it is a
/// conjugate-linear involution: *₄(c·dz̄ᵢ∧dz̄ⱼ) = c̄·ε(ijkl)·dz̄ₖ∧dz̄ₗ.
Form02 star4_flat(const Form02& alpha);

/// Real dimensions of the ±1 fixed subspaces of *₄ inside Λ^{0,2} ≅ ℝ¹².
std::pair<int, int> star4_eigenspace_dims();

// ---------------------------------------------------------------------------

/// Oriented rational 4-plane in ℝ⁸ ≅ ℂ⁴, coordinates ordered
/// (x₁,y₁,x₂,y₂,x₃,y₃,x₄,y₄) with z_k = x_k + i·y_k.
struct FourPlane {
    std::array<RatVector, 4> span;  // each of length 8
    bool positively_oriented{true};
};

struct CayleyReport {
    double omega_plus_norm;        // |(ω|_P)⁺| in the induced metric
    double im_omega_value;         // Im(Ω)|_P per unit volume
    double cayley_calibration_gap; // 1 − (ReΩ − ½ω²)(P)/vol(P)
    bool omega_restriction_zero;   // exact: ω|_P = 0 (Lagrangian plane)
};

/// Evaluates ω|_P, its self-dual part in the induced metric, Im(Ω)|_P and the
/// Cayley calibration value (ReΩ − ½ω²)(P)/vol(P). The calibration gap is 0
/// exactly when (ω|_P)⁺ = 0 and Im(Ω)|_P = 0 (checked in floating point with
/// the caller's tolerance: the volume needs a square root). Throws on
/// degenerate planes.
CayleyReport cayley_check(const FourPlane& P);

// ---------------------------------------------------------------------------

using IntMatrix = std::vector<std::vector<Int>>;

struct Definiteness {
    bool definite{false};
    int sign{0};  // +1 positive, −1 negative, 0 not definite
};

/// Sylvester. The empty form counts as (vacuously) positive definite.
Definiteness is_definite(const IntMatrix& F);

bool is_unimodular(const IntMatrix& F);

/// Integer basis change U with Uᵀ·F·U = ±identity for a definite unimodular
/// form of rank ≤ 4, found by short-vector enumeration (norm-1 vectors via
/// exact LDLᵀ branch and bound) and greedy orthonormal extension. nullopt
/// means the search found no completion; for rank ≤ 4 that would contradict
/// the classification of small definite unimodular lattices, so callers treat
/// it as a failure. Throws on non-unimodular, non-definite or rank > 4 input.
std::optional<IntMatrix> diagonalize_definite(const IntMatrix& F);

}  // namespace ainov
