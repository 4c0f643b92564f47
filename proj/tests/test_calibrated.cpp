#include "doctest.h"

#include <cmath>

#include "ainov/calibrated.hpp"
#include "ainov/rng.hpp"

using namespace ainov;

namespace {

Metric4 random_definite_metric(Rng& rng) {
    // g = AᵀA + I with a small random integer A: positive definite, rational.
    RatMatrix A(4, RatVector(4, Rat(0)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) A[i][j] = Rat(rng.range(-2, 2));
    RatMatrix g(4, RatVector(4, Rat(0)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) g[i][j] += A[k][i] * A[k][j];
            if (i == j) g[i][j] += 1;
        }
    return Metric4(std::move(g));
}

TwoForm random_form(Rng& rng) {
    TwoForm w;
    for (auto& c : w) c = rng.small_rational() * Rat(rng.range(0, 1));
    return w;
}

FourPlane random_plane(Rng& rng) {
    while (true) {
        FourPlane P;
        for (auto& v : P.span) {
            v.assign(8, Rat(0));
            for (auto& c : v) c = Rat(rng.range(-3, 3));
        }
        P.positively_oriented = rng.coin();
        RatMatrix gram(4, RatVector(4, Rat(0)));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 8; ++c) gram[a][b] += P.span[a][c] * P.span[b][c];
        if (matrix_rank(gram) == 4) return P;
    }
}

bool qzero(const QTwoForm& w) {
    for (const auto& c : w)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

TEST_SUITE("calibrated") {

TEST_CASE("standard star on the identity metric") {
    Metric4 id = Metric4::identity();
    TwoForm e12{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    QTwoForm s = hodge_star2(id, e12);
    CHECK(s[5] == QScalar::rational(Rat(1)));  // e34
    for (int p = 0; p < 5; ++p) CHECK(s[p].is_zero());
}

TEST_CASE("star values on diag(4,1,1,1)") {
    RatMatrix g(4, RatVector(4, Rat(0)));
    g[0][0] = 4;
    g[1][1] = g[2][2] = g[3][3] = 1;
    Metric4 m(std::move(g));

    TwoForm e12{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    QTwoForm s12 = hodge_star2(m, e12);
    CHECK(s12[5] == QScalar::rational(Rat(1, 2)));  // *(e12) = ½ e34

    TwoForm e34{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
    QTwoForm s34 = hodge_star2(m, e34);
    CHECK(s34[0] == QScalar::rational(Rat(2)));  // *(e34) = 2 e12
}

TEST_CASE("star is an involution for random definite metrics") {
    Rng rng(0x57A4);
    for (int trial = 0; trial < 100; ++trial) {
        Metric4 g = random_definite_metric(rng);
        StarContext ctx(g);
        TwoForm w = random_form(rng);
        QTwoForm ww = ctx.star(ctx.star(w));
        QTwoForm orig = lift(w, ctx.det());
        for (int p = 0; p < 6; ++p) CHECK(ww[p] == orig[p]);
    }
}

TEST_CASE("eigenspace dimensions are (3,3) for random metrics") {
    Rng rng(0x3333);
    for (int trial = 0; trial < 25; ++trial) {
        StarContext ctx(random_definite_metric(rng));
        auto [p, m] = ctx.eigenspace_dims();
        CHECK(p == 3);
        CHECK(m == 3);
    }
}

TEST_CASE("sd split: standard SD and ASD basis vectors") {
    Metric4 id = Metric4::identity();
    TwoForm sd{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};   // e12+e34
    auto [p1, m1] = sd_split(id, sd);
    CHECK(qzero(m1));
    CHECK(p1[0] == QScalar::rational(Rat(1)));

    TwoForm asd{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-1)};  // e12−e34
    auto [p2, m2] = sd_split(id, asd);
    CHECK(qzero(p2));
    CHECK(m2[5] == QScalar::rational(Rat(-1)));
}

TEST_CASE("sd split reassembles and lands in the right eigenspaces") {
    Rng rng(0x5D17);
    for (int trial = 0; trial < 50; ++trial) {
        Metric4 g = random_definite_metric(rng);
        StarContext ctx(g);
        TwoForm w = random_form(rng);
        auto [plus, minus] = sd_split(g, w);
        QTwoForm sp = ctx.star(plus), sm = ctx.star(minus);
        for (int p = 0; p < 6; ++p) {
            CHECK(plus[p] + minus[p] == QScalar::rational(w[p]));
            CHECK(sp[p] == plus[p]);
            CHECK(sm[p] == -minus[p]);
        }
    }
}

TEST_CASE("wedge identity worked example: w = e12 on the identity metric") {
    Metric4 id = Metric4::identity();
    TwoForm w{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    StarContext ctx(id);
    auto [plus, minus] = sd_split(id, w);
    CHECK(ctx.norm2(plus) == QScalar::rational(Rat(1, 2)));
    CHECK(ctx.norm2(minus) == QScalar::rational(Rat(1, 2)));
    WedgeCheck check = wedge_square_check(id, w);
    CHECK(check.wedge_residual.is_zero());
    CHECK(check.energy_residual.is_zero());
}

TEST_CASE("wedge and energy identities vanish exactly on 100 random pairs") {
    Rng rng(0xE499);
    for (int trial = 0; trial < 100; ++trial) {
        Metric4 g = random_definite_metric(rng);
        TwoForm w = random_form(rng);
        WedgeCheck check = wedge_square_check(g, w);
        CHECK(check.wedge_residual.is_zero());
        CHECK(check.energy_residual.is_zero());
    }
    WedgeCheck zero = wedge_square_check(Metric4::identity(), TwoForm{});
    CHECK(zero.wedge_residual.is_zero());
}

TEST_CASE("ASD family with vanishing total wedge forces every member to zero") {
    // Linear-algebra shadow of the Lagrangian converse: if all (wᵢ)⁺ = 0 and
    // Σ (wᵢ∧wᵢ) = 0 then every wᵢ = 0, because wᵢ∧wᵢ = −|wᵢ⁻|²·dvol ≤ 0.
    Rng rng(0xA5D);
    for (int trial = 0; trial < 20; ++trial) {
        Metric4 g = random_definite_metric(rng);
        StarContext ctx(g);
        std::vector<QTwoForm> family;
        for (int i = 0; i < 3; ++i) {
            auto [plus, minus] = sd_split(g, random_form(rng));
            family.push_back(minus);  // (wᵢ)⁺ = 0 by construction
        }
        QScalar total;
        for (const auto& w : family) total = total + wedge_square_coefficient(w);
        bool all_zero = true;
        for (const auto& w : family) all_zero = all_zero && qzero(w);
        if (total.is_zero()) {
            CHECK(all_zero);
        } else {
            CHECK(!all_zero);
        }
    }
}

TEST_CASE("star4 on the flat model") {
    Form02 a{};
    a[0] = GaussRat(Rat(1), Rat(0));  // dz̄1∧dz̄2
    Form02 s = star4_flat(a);
    CHECK(s[5] == GaussRat(Rat(1), Rat(0)));  // +dz̄3∧dz̄4, unit constant

    // Conjugate linearity: i·dz̄1∧dz̄2 ↦ −i·dz̄3∧dz̄4.
    Form02 ia{};
    ia[0] = GaussRat(Rat(0), Rat(1));
    Form02 si = star4_flat(ia);
    CHECK(si[5] == GaussRat(Rat(0), Rat(-1)));

    // ε sign on the (13) ↔ (24) pair.
    Form02 b{};
    b[1] = GaussRat(Rat(1), Rat(0));
    CHECK(star4_flat(b)[4] == GaussRat(Rat(-1), Rat(0)));
}

TEST_CASE("star4 is an involution on all basis forms") {
    Rng rng(0x5744);
    for (int trial = 0; trial < 50; ++trial) {
        Form02 a{};
        for (auto& c : a) c = GaussRat(rng.small_rational(), rng.small_rational());
        Form02 ss = star4_flat(star4_flat(a));
        for (int p = 0; p < 6; ++p) CHECK(ss[p] == a[p]);
    }
}

TEST_CASE("star4 fixed subspaces have real dimensions (6,6)") {
    auto [p, m] = star4_eigenspace_dims();
    CHECK(p == 6);
    CHECK(m == 6);
}

TEST_CASE("cayley: the special Lagrangian real slice") {
    FourPlane P;
    for (int a = 0; a < 4; ++a) {
        P.span[a].assign(8, Rat(0));
        P.span[a][2 * a] = 1;  // ∂x_{a+1}
    }
    CayleyReport r = cayley_check(P);
    CHECK(r.omega_restriction_zero);
    CHECK(std::abs(r.omega_plus_norm) < 1e-12);
    CHECK(std::abs(r.im_omega_value) < 1e-12);
    CHECK(std::abs(r.cayley_calibration_gap) < 1e-12);
}

TEST_CASE("cayley: the complex plane z3 = z4 = 0") {
    FourPlane P;
    for (auto& v : P.span) v.assign(8, Rat(0));
    P.span[0][0] = 1;  // ∂x1
    P.span[1][1] = 1;  // ∂y1
    P.span[2][2] = 1;  // ∂x2
    P.span[3][3] = 1;  // ∂y2
    CayleyReport r = cayley_check(P);
    CHECK(!r.omega_restriction_zero);
    CHECK(r.omega_plus_norm > 1e-6);
    CHECK(std::abs(r.cayley_calibration_gap - 2.0) < 1e-12);  // value −vol

    // Reversing the orientation flips the calibration value.
    P.positively_oriented = false;
    CayleyReport rr = cayley_check(P);
    CHECK(std::abs(rr.cayley_calibration_gap) < 1e-12);
}

TEST_CASE("cayley: Lagrangian with nonzero phase is ASD but not special") {
    // Span {(3/5 + 4/5·i)e1, e2, e3, e4}: ω|_P = 0, Im Ω = 4/5, gap = 2/5.
    FourPlane P;
    for (auto& v : P.span) v.assign(8, Rat(0));
    P.span[0][0] = Rat(3, 5);
    P.span[0][1] = Rat(4, 5);
    P.span[1][2] = 1;
    P.span[2][4] = 1;
    P.span[3][6] = 1;
    CayleyReport r = cayley_check(P);
    CHECK(r.omega_restriction_zero);
    CHECK(std::abs(r.omega_plus_norm) < 1e-12);
    CHECK(std::abs(r.im_omega_value - 0.8) < 1e-12);
    CHECK(std::abs(r.cayley_calibration_gap - 0.4) < 1e-12);
}

TEST_CASE("cayley biconditional on 1000 random planes") {
    Rng rng(0xCA71E);
    const double tol = 1e-9;
    for (int trial = 0; trial < 1000; ++trial) {
        CayleyReport r = cayley_check(random_plane(rng));
        bool calibrated = std::abs(r.cayley_calibration_gap) < tol;
        bool special_asd = std::abs(r.omega_plus_norm) < tol && std::abs(r.im_omega_value) < tol;
        CHECK(calibrated == special_asd);
    }
}

TEST_CASE("is_definite examples") {
    IntMatrix id3{{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}};
    CHECK(is_definite(id3).sign == 1);
    IntMatrix mixed{{Int(1), Int(0)}, {Int(0), Int(-1)}};
    CHECK(!is_definite(mixed).definite);
    IntMatrix small{{Int(2), Int(1)}, {Int(1), Int(1)}};
    CHECK(is_definite(small).sign == 1);
    IntMatrix neg{{Int(-2), Int(1)}, {Int(1), Int(-1)}};
    CHECK(is_definite(neg).sign == -1);
}

TEST_CASE("diagonalize the worked 2x2 example") {
    IntMatrix F{{Int(2), Int(1)}, {Int(1), Int(1)}};
    auto U = diagonalize_definite(F);
    REQUIRE(U.has_value());
    // UᵀFU = I is verified inside; spot-check the determinant is ±1.
    Rat det = Rat((*U)[0][0]) * Rat((*U)[1][1]) - Rat((*U)[0][1]) * Rat((*U)[1][0]);
    CHECK((det == 1 || det == -1));
}

TEST_CASE("identity diagonalizes to itself-like bases; errors propagate") {
    IntMatrix id2{{Int(1), Int(0)}, {Int(0), Int(1)}};
    auto U = diagonalize_definite(id2);
    REQUIRE(U.has_value());

    IntMatrix non_uni{{Int(2), Int(0)}, {Int(0), Int(1)}};
    CHECK_THROWS_AS(diagonalize_definite(non_uni), std::invalid_argument);
    IntMatrix indef{{Int(1), Int(0)}, {Int(0), Int(-1)}};
    CHECK_THROWS_AS(diagonalize_definite(indef), std::invalid_argument);
}

TEST_CASE("random unimodular conjugates of ±identity are recovered") {
    Rng rng(0x6E0);
    for (int trial = 0; trial < 60; ++trial) {
        int k = rng.range(1, 4);
        int sign = rng.coin() ? 1 : -1;
        // Random U ∈ GL_k(ℤ) as a product of shears and swaps.
        std::vector<std::vector<long>> u(k, std::vector<long>(k, 0));
        for (int i = 0; i < k; ++i) u[i][i] = 1;
        for (int step = 0; step < 6; ++step) {
            int i = rng.range(0, k - 1), j = rng.range(0, k - 1);
            if (i == j) continue;
            long c = rng.range(-2, 2);
            for (int col = 0; col < k; ++col) u[i][col] += c * u[j][col];
        }
        IntMatrix F(k, std::vector<Int>(k, Int(0)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                long acc = 0;
                for (int m = 0; m < k; ++m) acc += u[m][i] * u[m][j];
                F[i][j] = Int(sign * acc);
            }
        auto U = diagonalize_definite(F);
        CHECK(U.has_value());
        CHECK(is_definite(F).sign == sign);
    }
}

}  // TEST_SUITE
