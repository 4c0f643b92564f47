#include "ainov/calibrated.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ainov {

namespace {

const std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int i, int j) {
    for (std::size_t p = 0; p < kPairs.size(); ++p)
        if (kPairs[p].first == i && kPairs[p].second == j) return static_cast<int>(p);
    throw std::logic_error("bad index pair");
}

int eps4(int a, int b, int c, int d) {
    int perm[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (perm[i] == perm[j]) return 0;
            if (perm[i] > perm[j]) sign = -sign;
        }
    return sign;
}

}  // namespace

QScalar::QScalar(Rat a_, Rat b_, Rat d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
    if (d <= 0) throw std::invalid_argument("quadratic field discriminant must be positive");
    if (b != 0) {
        if (auto s = exact_sqrt(d)) {
            a += b * *s;
            b = 0;
        }
    }
    if (b == 0) d = 1;  // canonical: rational values carry d = 1
}

QScalar QScalar::operator-() const {
    QScalar out = *this;
    out.a = -out.a;
    out.b = -out.b;
    return out;
}

namespace {
Rat merged_d(const QScalar& x, const QScalar& y) {
    if (x.b == 0) return y.d;
    if (y.b == 0) return x.d;
    if (x.d != y.d) throw std::invalid_argument("mixing different quadratic extensions");
    return x.d;
}
}  // namespace

QScalar operator+(const QScalar& x, const QScalar& y) {
    return QScalar(x.a + y.a, x.b + y.b, merged_d(x, y));
}

QScalar operator-(const QScalar& x, const QScalar& y) {
    return QScalar(x.a - y.a, x.b - y.b, merged_d(x, y));
}

QScalar operator*(const QScalar& x, const QScalar& y) {
    Rat d = merged_d(x, y);
    return QScalar(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
}

QScalar QScalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero in quadratic field");
    if (b == 0) return QScalar(Rat(1) / a, Rat(0), Rat(1));
    Rat norm = a * a - b * b * d;  // nonzero: d is not a perfect square here
    return QScalar(a / norm, -b / norm, d);
}

bool QScalar::operator==(const QScalar& o) const {
    if (a != o.a || b != o.b) return false;
    return b == 0 || d == o.d;
}

double QScalar::to_double() const {
    double out = mpq_get_d(a.get_mpq_t());
    if (b != 0) out += mpq_get_d(b.get_mpq_t()) * std::sqrt(mpq_get_d(d.get_mpq_t()));
    return out;
}

std::string QScalar::to_string() const {
    std::ostringstream os;
    os << rat_to_string(a);
    if (b != 0) os << " + " << rat_to_string(b) << "*sqrt(" << rat_to_string(d) << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

Metric4::Metric4(RatMatrix m) : g(std::move(m)) {
    if (g.size() != 4) throw std::invalid_argument("metric must be 4x4");
    for (const auto& row : g)
        if (row.size() != 4) throw std::invalid_argument("metric must be 4x4");
    if (!is_symmetric(g)) throw std::invalid_argument("metric must be symmetric");
    if (definiteness(g) != 1) throw std::invalid_argument("metric must be positive definite");
}

Metric4 Metric4::identity() {
    RatMatrix m(4, RatVector(4, Rat(0)));
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return Metric4(std::move(m));
}

RatMatrix Metric4::inverse() const {
    // Gauss-Jordan on [g | I].
    RatMatrix m(4, RatVector(8, Rat(0)));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) m[i][j] = g[i][j];
        m[i][4 + i] = 1;
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        while (pivot < 4 && m[pivot][col] == 0) ++pivot;
        if (pivot == 4) throw std::logic_error("definite metric is singular?");
        std::swap(m[pivot], m[col]);
        Rat p = m[col][col];
        for (int c = 0; c < 8; ++c) m[col][c] /= p;
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int c = 0; c < 8; ++c) m[r][c] -= f * m[col][c];
        }
    }
    RatMatrix inv(4, RatVector(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[i][j] = m[i][4 + j];
    return inv;
}

Rat Metric4::det() const { return matrix_det(g); }

QTwoForm lift(const TwoForm& w, const Rat&) {
    QTwoForm out;
    for (int p = 0; p < 6; ++p) out[p] = QScalar::rational(w[p]);
    return out;
}

StarContext::StarContext(const Metric4& g, int orientation) : det_(g.det()) {
    RatMatrix ginv = g.inverse();
    // (*w)_{kl} = ½ ε_{ijkl} g^{ii′}g^{jj′} w_{i′j′}, the √det factor carried
    // symbolically by star().
    K_.assign(6, RatVector(6, Rat(0)));
    for (int p = 0; p < 6; ++p) {
        auto [k, l] = kPairs[p];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                int e = eps4(i, j, k, l) * orientation;
                if (e == 0) continue;
                for (int q = 0; q < 6; ++q) {
                    auto [ip, jp] = kPairs[q];
                    Rat c = ginv[i][ip] * ginv[j][jp] - ginv[i][jp] * ginv[j][ip];
                    if (c != 0) K_[p][q] += Rat(e) * c / 2;
                }
            }
    }
    // Induced metric on 2-forms: ⟨e_{ij}, e_{kl}⟩ = g^{ik}g^{jl} − g^{il}g^{jk}.
    lambda2_.assign(6, RatVector(6, Rat(0)));
    for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q) {
            auto [i, j] = kPairs[p];
            auto [k, l] = kPairs[q];
            lambda2_[p][q] = ginv[i][k] * ginv[j][l] - ginv[i][l] * ginv[j][k];
        }
}

QTwoForm StarContext::star(const QTwoForm& w) const {
    QScalar root = QScalar::sqrt_d(det_);
    QTwoForm out;
    for (int p = 0; p < 6; ++p) {
        QScalar acc;
        for (int q = 0; q < 6; ++q) {
            if (K_[p][q] == 0) continue;
            acc = acc + QScalar::rational(K_[p][q]) * w[q];
        }
        out[p] = root * acc;
    }
    return out;
}

QScalar StarContext::inner(const QTwoForm& v, const QTwoForm& w) const {
    QScalar acc;
    for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q) {
            if (lambda2_[p][q] == 0) continue;
            acc = acc + v[p] * QScalar::rational(lambda2_[p][q]) * w[q];
        }
    return acc;
}

std::pair<int, int> StarContext::eigenspace_dims() const {
    // (√d·K)² = 1, so the ± eigenspace dimensions are 6 − rank(√d·K ∓ 1),
    // computed by exact elimination in ℚ(√d).
    auto rank_of = [&](int sign) {
        std::vector<std::vector<QScalar>> m(6, std::vector<QScalar>(6));
        QScalar root = QScalar::sqrt_d(det_);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                m[i][j] = root * QScalar::rational(K_[i][j]);
                if (i == j) m[i][j] = m[i][j] - QScalar::rational(Rat(sign));
            }
        int rank = 0;
        std::size_t row = 0;
        for (std::size_t col = 0; col < 6 && row < 6; ++col) {
            std::size_t pivot = row;
            while (pivot < 6 && m[pivot][col].is_zero()) ++pivot;
            if (pivot == 6) continue;
            std::swap(m[pivot], m[row]);
            for (std::size_t r = 0; r < 6; ++r) {
                if (r == row || m[r][col].is_zero()) continue;
                QScalar f = m[r][col] / m[row][col];
                for (std::size_t c = col; c < 6; ++c) m[r][c] = m[r][c] - f * m[row][c];
            }
            ++row, ++rank;
        }
        return rank;
    };
    int plus_dim = 6 - rank_of(+1);
    int minus_dim = 6 - rank_of(-1);
    return {plus_dim, minus_dim};
}

QTwoForm hodge_star2(const Metric4& g, const TwoForm& w) {
    StarContext ctx(g);
    return ctx.star(w);
}

std::pair<QTwoForm, QTwoForm> sd_split(const Metric4& g, const TwoForm& w) {
    StarContext ctx(g);
    QTwoForm sw = ctx.star(w);
    QTwoForm plus, minus;
    QScalar half = QScalar::rational(Rat(1, 2));
    for (int p = 0; p < 6; ++p) {
        QScalar wp = QScalar::rational(w[p]);
        plus[p] = half * (wp + sw[p]);
        minus[p] = half * (wp - sw[p]);
    }
    return {plus, minus};
}

QScalar wedge_square_coefficient(const QTwoForm& w) {
    // w∧w = 2(w12·w34 − w13·w24 + w14·w23)·e1234
    QScalar two = QScalar::rational(Rat(2));
    return two * (w[0] * w[5] - w[1] * w[4] + w[2] * w[3]);
}

WedgeCheck wedge_square_check(const Metric4& g, const TwoForm& w) {
    StarContext ctx(g);
    auto [plus, minus] = sd_split(g, w);
    QScalar np = ctx.norm2(plus), nm = ctx.norm2(minus);
    QScalar root = QScalar::sqrt_d(ctx.det());
    WedgeCheck out;
    out.wedge_residual = wedge_square_coefficient(lift(w, ctx.det())) - (np - nm) * root;
    out.energy_residual = ctx.norm2(lift(w, ctx.det())) - np - nm;
    return out;
}

// ---------------------------------------------------------------------------

Form02 star4_flat(const Form02& alpha) {
    Form02 out;
    for (int p = 0; p < 6; ++p) {
        auto [i, j] = kPairs[p];
        int k = -1, l = -1;
        for (int c = 0; c < 4; ++c) {
            if (c == i || c == j) continue;
            if (k < 0)
                k = c;
            else
                l = c;
        }
        int sign = eps4(i, j, k, l);
        GaussRat value = alpha[p].conj();
        if (sign < 0) value = GaussRat() - value;
        out[pair_index(k, l)] = out[pair_index(k, l)] + value;
    }
    return out;
}

std::pair<int, int> star4_eigenspace_dims() {
    // Real-linear action on (re, im) pairs of the 6 complex coordinates.
    RatMatrix M(12, RatVector(12, Rat(0)));
    for (int p = 0; p < 6; ++p) {
        auto [i, j] = kPairs[p];
        int k = -1, l = -1;
        for (int c = 0; c < 4; ++c) {
            if (c == i || c == j) continue;
            if (k < 0)
                k = c;
            else
                l = c;
        }
        int q = pair_index(k, l);
        int sign = eps4(i, j, k, l);
        M[2 * q][2 * p] = Rat(sign);           // re ← sign·re
        M[2 * q + 1][2 * p + 1] = Rat(-sign);  // im ← −sign·im (conjugation)
    }
    auto dim_of = [&](int sign) {
        RatMatrix m = M;
        for (int i = 0; i < 12; ++i) m[i][i] -= Rat(sign);
        return 12 - matrix_rank(std::move(m));
    };
    return {dim_of(+1), dim_of(-1)};
}

// ---------------------------------------------------------------------------

CayleyReport cayley_check(const FourPlane& P) {
    for (const auto& v : P.span)
        if (v.size() != 8) throw std::invalid_argument("plane spanning vectors must live in R^8");

    RatMatrix gram(4, RatVector(4, Rat(0)));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 8; ++c) gram[a][b] += P.span[a][c] * P.span[b][c];
    if (matrix_rank(gram) != 4) throw std::invalid_argument("degenerate plane: rank < 4");

    int orient = P.positively_oriented ? 1 : -1;

    // ω = Σ dx_k∧dy_k restricted to the plane.
    auto omega_of = [&](int a, int b) {
        Rat out(0);
        for (int k = 0; k < 4; ++k)
            out += P.span[a][2 * k] * P.span[b][2 * k + 1] - P.span[a][2 * k + 1] * P.span[b][2 * k];
        return out;
    };
    TwoForm omega;
    for (int p = 0; p < 6; ++p) omega[p] = omega_of(kPairs[p].first, kPairs[p].second);
    bool omega_zero = std::all_of(omega.begin(), omega.end(), [](const Rat& r) { return r == 0; });

    // Self-dual part in the induced metric, with the plane's orientation.
    Metric4 induced{gram};
    StarContext ctx(induced, orient);
    QTwoForm sw = ctx.star(omega);
    QTwoForm plus;
    QScalar half = QScalar::rational(Rat(1, 2));
    for (int p = 0; p < 6; ++p) plus[p] = half * (QScalar::rational(omega[p]) + sw[p]);
    double plus_norm2 = ctx.norm2(plus).to_double();

    // Ω(v₁,…,v₄) = det_ℂ of the column matrix in ℂ⁴, exact over ℚ(i).
    GaussRat det;
    {
        std::array<std::array<GaussRat, 4>, 4> z;
        for (int a = 0; a < 4; ++a)
            for (int k = 0; k < 4; ++k) z[k][a] = GaussRat(P.span[a][2 * k], P.span[a][2 * k + 1]);
        int idx[4] = {0, 1, 2, 3};
        do {
            int sign = eps4(idx[0], idx[1], idx[2], idx[3]);
            GaussRat term(Rat(sign), Rat(0));
            for (int k = 0; k < 4; ++k) term = term * z[k][idx[k]];
            det = det + term;
        } while (std::next_permutation(idx, idx + 4));
    }

    double vol = std::sqrt(mpq_get_d(matrix_det(gram).get_mpq_t()));
    Rat omega_sq = Rat(2) * (omega[0] * omega[5] - omega[1] * omega[4] + omega[2] * omega[3]);

    CayleyReport report;
    report.omega_plus_norm = std::sqrt(std::max(0.0, plus_norm2));
    report.im_omega_value = orient * mpq_get_d(det.im.get_mpq_t()) / vol;
    double calib =
        orient * (mpq_get_d(det.re.get_mpq_t()) - mpq_get_d(omega_sq.get_mpq_t()) / 2.0) / vol;
    report.cayley_calibration_gap = 1.0 - calib;
    report.omega_restriction_zero = omega_zero;
    return report;
}

// ---------------------------------------------------------------------------

Definiteness is_definite(const IntMatrix& F) {
    RatMatrix m(F.size(), RatVector(F.empty() ? 0 : F[0].size()));
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = 0; j < F[i].size(); ++j) m[i][j] = Rat(F[i][j]);
    int sign = definiteness(m);
    return Definiteness{sign != 0, sign};
}

bool is_unimodular(const IntMatrix& F) {
    RatMatrix m(F.size(), RatVector(F.empty() ? 0 : F[0].size()));
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = 0; j < F[i].size(); ++j) m[i][j] = Rat(F[i][j]);
    Rat d = matrix_det(std::move(m));
    return d == 1 || d == -1;
}

namespace {

/// All v with vᵀFv = 1 (F positive definite), up to sign: exact LDLᵀ branch
/// and bound. The first nonzero entry of each vector is normalized positive.
std::vector<std::vector<long>> norm_one_vectors(const RatMatrix& F) {
    std::size_t n = F.size();
    RatMatrix L(n, RatVector(n, Rat(0)));
    RatVector D(n, Rat(0));
    RatMatrix work = F;
    for (std::size_t i = 0; i < n; ++i) {
        L[i][i] = 1;
        D[i] = work[i][i];
        for (std::size_t j = i + 1; j < n; ++j) L[j][i] = work[j][i] / D[i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) work[j][k] -= L[j][i] * D[i] * L[k][i];
    }
    // q(v) = Σ D[i]·(v_i + Σ_{j>i} L[j][i]·v_j)², enumerated last coordinate
    // first with exact budget pruning.
    std::vector<std::vector<long>> out;
    std::vector<long> v(n, 0);
    std::function<void(int, Rat)> recurse = [&](int level, Rat budget) {
        if (level < 0) {
            if (budget == 0) {
                std::vector<long> candidate = v;
                for (std::size_t i = 0; i < n; ++i) {
                    if (candidate[i] == 0) continue;
                    if (candidate[i] < 0)
                        for (auto& c : candidate) c = -c;
                    break;
                }
                if (std::find(out.begin(), out.end(), candidate) == out.end())
                    out.push_back(candidate);
            }
            return;
        }
        Rat shift(0);
        for (std::size_t j = level + 1; j < n; ++j) shift += L[j][level] * Rat(v[j]);
        double r = std::sqrt(mpq_get_d(Rat(budget / D[level]).get_mpq_t())) + 1e-9;
        double center = -mpq_get_d(shift.get_mpq_t());
        long lo = static_cast<long>(std::ceil(center - r)) - 1;
        long hi = static_cast<long>(std::floor(center + r)) + 1;
        for (long val = lo; val <= hi; ++val) {
            Rat term = D[level] * (Rat(val) + shift) * (Rat(val) + shift);
            if (term > budget) continue;
            v[level] = val;
            recurse(level - 1, budget - term);
        }
        v[level] = 0;
    };
    recurse(static_cast<int>(n) - 1, Rat(1));
    std::sort(out.begin(), out.end());
    return out;
}

bool extend_orthonormal(const RatMatrix& F, const std::vector<std::vector<long>>& candidates,
                        std::vector<std::vector<long>>& chosen) {
    std::size_t n = F.size();
    if (chosen.size() == n) return true;
    for (const auto& c : candidates) {
        bool orthogonal = true;
        for (const auto& u : chosen) {
            Rat dot(0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) dot += Rat(u[i]) * F[i][j] * Rat(c[j]);
            if (dot != 0) {
                orthogonal = false;
                break;
            }
        }
        if (!orthogonal) continue;
        chosen.push_back(c);
        if (extend_orthonormal(F, candidates, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<IntMatrix> diagonalize_definite(const IntMatrix& F) {
    std::size_t n = F.size();
    for (const auto& row : F)
        if (row.size() != n) throw std::invalid_argument("intersection form must be square");
    if (n > 4) throw std::invalid_argument("diagonalization is specified for rank <= 4");
    if (!is_unimodular(F)) throw std::invalid_argument("intersection form must be unimodular");
    Definiteness def = is_definite(F);
    if (!def.definite) throw std::invalid_argument("intersection form must be definite");
    if (n == 0) return IntMatrix{};

    RatMatrix positive(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int v = F[i][j];
            if (def.sign < 0) v = -v;
            positive[i][j] = Rat(v);
        }

    auto candidates = norm_one_vectors(positive);
    std::vector<std::vector<long>> chosen;
    if (!extend_orthonormal(positive, candidates, chosen)) return std::nullopt;

    IntMatrix U(n, std::vector<Int>(n));
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row) U[row][col] = Int(chosen[col][row]);

    // Verify UᵀFU = ±I exactly before returning.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int acc(0);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) acc += U[k][i] * F[k][l] * U[l][j];
            Int expect = (i == j) ? Int(def.sign) : Int(0);
            if (acc != expect) throw std::logic_error("diagonalization verification failed");
        }
    return U;
}

}  // namespace ainov
