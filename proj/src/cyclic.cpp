#include "ainov/cyclic.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "ainov/linalg.hpp"

namespace ainov {

CyclicPairing::CyclicPairing(ModulePtr module, int n, const Rat& cutoff)
    : module_(std::move(module)), n_(n), cutoff_(cutoff) {
    if (!module_) throw std::invalid_argument("pairing requires a module");
}

int CyclicPairing::flip_sign(int deg_x, int deg_y) {
    long exponent = static_cast<long>(deg_x + 1) * (deg_y + 1) + 1;
    return ((exponent % 2) + 2) % 2 == 0 ? 1 : -1;
}

void CyclicPairing::set_entry(LabelId x, LabelId y, const Nov& value) {
    if (value.cutoff() != cutoff_) throw CutoffMismatch("pairing entry cutoff mismatch");
    int dx = module_->degree(x), dy = module_->degree(y);
    if (!value.is_zero() && dx + dy != n_)
        throw std::invalid_argument("pairing entry violates total degree -n: Q(" +
                                    module_->label(x) + "," + module_->label(y) + ") with n=" +
                                    std::to_string(n_));
    int sign = flip_sign(dx, dy);
    if (x == y && sign < 0 && !value.is_zero())
        throw std::invalid_argument("diagonal pairing entry must vanish in odd degree");

    auto install = [&](LabelId a, LabelId b, const Nov& v) {
        if (v.is_zero())
            entries_.erase({a, b});
        else
            entries_.insert_or_assign(std::make_pair(a, b), v);
    };
    install(x, y, value);
    Nov flipped = value;
    if (sign < 0) flipped = -flipped;
    install(y, x, flipped);
}

void CyclicPairing::set_entry(LabelId x, LabelId y, const Rat& value) {
    set_entry(x, y, Nov::constant(value, cutoff_));
}

Nov CyclicPairing::entry(LabelId x, LabelId y) const {
    auto it = entries_.find({x, y});
    return it == entries_.end() ? Nov::zero(cutoff_) : it->second;
}

Nov CyclicPairing::pair(const Element& a, const Element& b) const {
    Nov out = Nov::zero(cutoff_);
    for (const auto& [la, ca] : a.terms()) {
        for (const auto& [lb, cb] : b.terms()) {
            auto it = entries_.find({la, lb});
            if (it == entries_.end()) continue;
            out += it->second * ca * cb;
        }
    }
    return out;
}

std::vector<LabelId> CyclicPairing::partners(LabelId x) const {
    std::vector<LabelId> out;
    for (auto it = entries_.lower_bound({x, 0}); it != entries_.end() && it->first.first == x; ++it)
        out.push_back(it->first.second);
    return out;
}

std::vector<std::vector<Rat>> CyclicPairing::block(int degree) const {
    const auto& rows = module_->labels_of_degree(degree);
    const auto& cols = module_->labels_of_degree(n_ - degree);
    RatMatrix m(rows.size(), RatVector(cols.size(), Rat(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Nov v = entry(rows[i], cols[j]);
            if (v.is_zero()) continue;
            if (!v.is_constant_coefficients() || v.terms().size() != 1 ||
                v.terms().front().lambda != 0 || v.terms().front().epow != 0)
                throw std::invalid_argument("pairing block requires constant rational entries");
            m[i][j] = v.terms().front().coeff.constant_value();
        }
    return m;
}

bool CyclicPairing::is_nondegenerate(int* witness_degree) const {
    for (int d : module_->degrees_present()) {
        if (d > n_ - d) continue;  // each block handled once
        std::size_t rows = module_->labels_of_degree(d).size();
        std::size_t cols = module_->labels_of_degree(n_ - d).size();
        if (rows != cols || (rows > 0 && matrix_rank(block(d)) != static_cast<int>(rows))) {
            if (witness_degree) *witness_degree = d;
            return false;
        }
    }
    // Degrees present only on the high side of a block.
    for (int d : module_->degrees_present()) {
        if (d <= n_ - d) continue;
        if (module_->labels_of_degree(n_ - d).empty()) {
            if (witness_degree) *witness_degree = d;
            return false;
        }
    }
    return true;
}

bool CyclicPairing::operator==(const CyclicPairing& o) const {
    return *module_ == *o.module_ && n_ == o.n_ && cutoff_ == o.cutoff_ && entries_ == o.entries_;
}

// ---------------------------------------------------------------------------

std::vector<CyclicityViolation> check_cyclicity(const AInftyStructure& S, const CyclicPairing& Q,
                                                int K, const Rat& energy) {
    if (!(*S.module() == *Q.module()))
        throw std::invalid_argument("structure and pairing live on different modules");
    if (Q.cutoff() != S.cutoffs().energy)
        throw CutoffMismatch("pairing and structure cutoffs disagree");
    if (K > S.cutoffs().max_arity || energy > S.cutoffs().energy)
        throw std::invalid_argument("cyclicity check cutoffs exceed the stored structure's cutoffs");

    const auto& M = *S.module();
    auto degrees = M.degrees_present();
    if (!degrees.empty()) {
        int dmin = degrees.front(), dmax = degrees.back();
        if (Q.n() < 2 * dmin || Q.n() > 2 * dmax)
            throw std::invalid_argument("pairing degree n=" + std::to_string(Q.n()) +
                                        " inconsistent with module grading range [" +
                                        std::to_string(dmin) + "," + std::to_string(dmax) + "]");
    }

    std::vector<CyclicityViolation> out;

    // Bullet 1: total degree and graded antisymmetry of Q itself.
    for (const auto& [key, value] : Q.entries()) {
        auto [x, y] = key;
        int dx = M.degree(x), dy = M.degree(y);
        if (dx + dy != Q.n()) {
            out.push_back({CyclicityKind::degree, -1, {x, y}, value, Nov::zero(Q.cutoff())});
            continue;
        }
        long exponent = static_cast<long>(dx + 1) * (dy + 1) + 1;
        Nov expected = Q.entry(y, x);
        if (((exponent % 2) + 2) % 2 != 0) expected = -expected;
        if (!(value - expected).is_zero_mod(energy))
            out.push_back({CyclicityKind::antisymmetry, -1, {x, y}, value, expected});
    }

    // Bullet 2: rotation invariance, driven by the sparse supports.
    for (int k = 1; k <= K; ++k) {
        if (!S.has_op(k)) continue;
        const auto& m = S.op(k);

        std::set<std::vector<LabelId>> words;  // (x0, x1, ..., xk)
        for (const auto& [t, o] : m.entries()) {
            for (const auto& [label, c] : o.terms()) {
                for (LabelId partner : Q.partners(label)) {
                    // As left side: Q(m(t), x0) with x0 = partner.
                    std::vector<LabelId> w;
                    w.reserve(t.size() + 1);
                    w.push_back(partner);
                    w.insert(w.end(), t.begin(), t.end());
                    words.insert(std::move(w));
                    // As rotated side: Q(m(t), x_k) where the word is t ++ partner.
                    std::vector<LabelId> w2(t);
                    w2.push_back(partner);
                    words.insert(std::move(w2));
                }
            }
        }

        for (const auto& w : words) {
            std::vector<LabelId> args_lhs(w.begin() + 1, w.end());
            std::vector<LabelId> args_rhs(w.begin(), w.end() - 1);
            Element x0 = Element::basis(S.module(), w.front(), Q.cutoff());
            Element xk = Element::basis(S.module(), w.back(), Q.cutoff());
            Nov lhs = Q.pair(m.entry(args_lhs), x0);
            Nov rhs = Q.pair(m.entry(args_rhs), xk);
            std::vector<int> rest_degrees;
            rest_degrees.reserve(args_lhs.size());
            for (LabelId id : args_lhs) rest_degrees.push_back(M.degree(id));
            if (rotation_sign(M.degree(w.front()), rest_degrees) < 0) rhs = -rhs;
            if (!(lhs - rhs).is_zero_mod(energy))
                out.push_back({CyclicityKind::rotation, k, w, lhs, rhs});
        }
    }
    return out;
}

std::vector<CyclicityViolation> check_cyclicity(const CyclicStructure& CS) {
    return check_cyclicity(CS.S, CS.Q, CS.S.cutoffs().max_arity, CS.S.cutoffs().energy);
}

// ---------------------------------------------------------------------------

Nov lemma_sum(const AInftyStructure& S, const CyclicPairing& Q, const Element& x, int k) {
    if (!(*S.module() == *Q.module()))
        throw std::invalid_argument("structure and pairing live on different modules");
    if (Q.cutoff() != S.cutoffs().energy)
        throw CutoffMismatch("pairing and structure cutoffs disagree");
    if (!x.is_zero()) {
        auto d = x.degree();
        if (!d || *d != 1) throw std::invalid_argument("lemma argument must be homogeneous of degree 1");
    }
    if (!x.is_plus()) throw std::invalid_argument("lemma argument must lie in Λ⁺");
    if (k < 0) throw std::invalid_argument("negative lemma index");

    std::vector<Element> powers;
    powers.reserve(static_cast<std::size_t>(k) + 2);
    for (int j = 0; j <= k + 1; ++j) {
        if (S.has_op(j))
            powers.push_back(S.op(j).apply(std::vector<Element>(static_cast<std::size_t>(j), x)));
        else
            powers.push_back(Element::zero(S.module(), S.cutoffs().energy));
    }
    Nov sum = Nov::zero(S.cutoffs().energy);
    for (int k1 = 0; k1 <= k + 1; ++k1) sum += Q.pair(powers[k1], powers[k + 1 - k1]);
    return sum;
}

Nov darboux_defect(const AInftyStructure& S, const CyclicPairing& Q, const Element& x) {
    if (Q.n() != 4)
        throw std::invalid_argument(
            "darboux defect needs n = 4 (degree-2 pairing of κ against itself vanishes by grading "
            "otherwise)");
    Element kappa = kuranishi_eval(S, x);
    Element m0 = S.curvature();
    return Q.pair(kappa, kappa) - Q.pair(m0, m0);
}

// ---------------------------------------------------------------------------

CyclicStructure cyclic_completion(const AInftyStructure& B, int n) {
    auto pre = check_relations(B);
    if (!pre.empty()) {
        std::ostringstream os;
        os << "cyclic completion input fails " << pre.size() << " A-infinity relation instance(s); first at k="
           << pre.front().k;
        throw CompletionError(os.str());
    }

    const auto& BM = *B.module();
    std::size_t rank = BM.rank();
    std::vector<std::pair<std::string, int>> basis;
    basis.reserve(2 * rank);
    for (LabelId i = 0; i < rank; ++i) basis.emplace_back(BM.label(i), BM.degree(i));
    for (LabelId i = 0; i < rank; ++i) {
        std::string dual = BM.label(i) + "*";
        if (BM.has_label(dual))
            throw CompletionError("dual label collides with existing basis label: " + dual);
        basis.emplace_back(dual, n - BM.degree(i));
    }
    auto CM = std::make_shared<GradedModule>(std::move(basis));
    auto dual_of = [rank](LabelId i) { return static_cast<LabelId>(i + rank); };

    const Cutoffs cut = B.cutoffs();
    const Rat& E = cut.energy;
    AInftyStructure S(CM, cut);
    CyclicPairing Q(CM, n, E);
    for (LabelId i = 0; i < rank; ++i) Q.set_entry(i, dual_of(i), Rat(1));

    for (const auto& [k, m_k] : B.ops()) {
        MultilinearMap& target = S.op_mut(k);
        for (const auto& [t, o] : m_k.entries()) {
            // B-only inputs: the original operation, labels carried over.
            Element lifted(CM, E);
            for (const auto& [label, c] : o.terms()) lifted.add_term(label, c);
            target.add_to_entry(t, lifted);

            // Exactly one dual input: output fixed by Q-adjunction. Every
            // nonzero value Q(m(a), v) arises by rotating some pure-B entry
            // (t, o) with v = t[q] until the dual lands in the pairing slot,
            // so the sparse entries drive the whole extension.
            for (int q = 0; q < k; ++q) {
                LabelId v = t[static_cast<std::size_t>(q)];
                for (const auto& [f, c] : o.terms()) {
                    std::vector<LabelId> a;
                    a.reserve(static_cast<std::size_t>(k));
                    a.insert(a.end(), t.begin() + q + 1, t.end());
                    a.push_back(dual_of(f));
                    a.insert(a.end(), t.begin(), t.begin() + q);

                    int sign = 1;
                    std::vector<LabelId> cur = a;
                    LabelId slot = v;
                    for (int step = 0; step <= q; ++step) {
                        std::vector<int> degs;
                        degs.reserve(cur.size());
                        for (LabelId id : cur) degs.push_back(CM->degree(id));
                        sign *= rotation_sign(CM->degree(slot), degs);
                        std::vector<LabelId> next;
                        next.reserve(cur.size());
                        next.push_back(slot);
                        next.insert(next.end(), cur.begin(), cur.end() - 1);
                        slot = cur.back();
                        cur = std::move(next);
                    }
                    if (cur != t || slot != dual_of(f))
                        throw CompletionError("internal rotation bookkeeping error");

                    Nov eps = Q.entry(dual_of(v), v);  // ±1 by construction
                    Rat eps_value = eps.leading_term().coeff.constant_value();
                    Nov coeff = c;
                    coeff *= eps_value * (sign < 0 ? Rat(-1) : Rat(1));
                    Element out(CM, E);
                    out.add_term(dual_of(v), coeff);
                    target.add_to_entry(a, out);
                }
            }
        }
    }
    // Drop empty arities and re-run the set_op validations.
    {
        std::vector<int> arities;
        for (const auto& [k, m] : S.ops()) arities.push_back(k);
        for (int k : arities) {
            MultilinearMap m = S.op(k);
            S.set_op(k, std::move(m));
        }
    }

    auto rel = check_relations(S);
    if (!rel.empty()) {
        std::ostringstream os;
        os << "cyclic completion failed verification: " << rel.size()
           << " relation violation(s); first at k=" << rel.front().k;
        throw CompletionVerificationError(os.str());
    }
    auto cyc = check_cyclicity(S, Q, cut.max_arity, E);
    if (!cyc.empty()) {
        std::ostringstream os;
        os << "cyclic completion failed verification: " << cyc.size() << " cyclicity violation(s)";
        throw CompletionVerificationError(os.str());
    }
    return CyclicStructure{std::move(S), std::move(Q)};
}

// ---------------------------------------------------------------------------

namespace {

using SparseVec = std::map<LabelId, Rat>;

SparseVec scaled_add(const SparseVec& a, const SparseVec& b, const Rat& factor) {
    SparseVec out = a;
    for (const auto& [id, c] : b) {
        out[id] += factor * c;
        if (out[id] == 0) out.erase(id);
    }
    return out;
}

}  // namespace

CyclicStructure frobenius_cyclic(const FrobeniusTable& table, int n, const Cutoffs& cutoffs) {
    auto M = std::make_shared<GradedModule>(table.basis);
    const Rat& E = cutoffs.energy;
    std::size_t rank = M->rank();
    if (rank == 0) throw FrobeniusError("empty multiplication table");
    if (!M->has_label(table.unit)) throw FrobeniusError("unit label not in basis: " + table.unit);
    LabelId unit = M->id(table.unit);
    if (M->degree(unit) != 0) throw FrobeniusError("unit must have degree 0");

    // Multiplication tensor as exact sparse vectors.
    std::vector<std::vector<SparseVec>> mult(rank, std::vector<SparseVec>(rank));
    for (const auto& [key, outputs] : table.products) {
        LabelId i = M->id(key.first), j = M->id(key.second);
        for (const auto& [label, c] : outputs) {
            LabelId z = M->id(label);
            if (M->degree(z) != M->degree(i) + M->degree(j))
                throw FrobeniusError("product " + key.first + "*" + key.second +
                                     " has an output of wrong degree: " + label);
            if (c != 0) mult[i][j][z] += c;
        }
        for (auto it = mult[i][j].begin(); it != mult[i][j].end();)
            it = (it->second == 0) ? mult[i][j].erase(it) : std::next(it);
    }

    for (LabelId j = 0; j < rank; ++j) {
        SparseVec expect{{j, Rat(1)}};
        if (mult[unit][j] != expect)
            throw FrobeniusError("table is not unital: 1*" + M->label(j));
        if (mult[j][unit] != expect)
            throw FrobeniusError("table is not unital: " + M->label(j) + "*1");
    }
    for (LabelId i = 0; i < rank; ++i)
        for (LabelId j = 0; j < rank; ++j) {
            Rat sign = (M->degree(i) * M->degree(j)) % 2 == 0 ? Rat(1) : Rat(-1);
            SparseVec flipped;
            for (const auto& [id, c] : mult[j][i]) flipped[id] = sign * c;
            if (mult[i][j] != flipped)
                throw FrobeniusError("table is not graded-commutative at " + M->label(i) + "*" +
                                     M->label(j));
        }
    for (LabelId i = 0; i < rank; ++i)
        for (LabelId j = 0; j < rank; ++j)
            for (LabelId k = 0; k < rank; ++k) {
                SparseVec left, right;  // (ij)k and i(jk)
                for (const auto& [m, c] : mult[i][j]) left = scaled_add(left, mult[m][k], c);
                for (const auto& [m, c] : mult[j][k]) right = scaled_add(right, mult[i][m], c);
                if (left != right)
                    throw FrobeniusError("table is not associative at (" + M->label(i) + "," +
                                         M->label(j) + "," + M->label(k) + ")");
            }

    const auto& top = M->labels_of_degree(n);
    if (top.size() != 1)
        throw FrobeniusError("trace needs exactly one degree-" + std::to_string(n) +
                             " basis class, found " + std::to_string(top.size()));
    LabelId top_label = top.front();

    CyclicPairing Q(M, n, E);
    for (LabelId i = 0; i < rank; ++i)
        for (LabelId j = i; j < rank; ++j) {
            auto it = mult[i][j].find(top_label);
            if (it != mult[i][j].end()) Q.set_entry(i, j, it->second);
        }
    // The auto-installed flips must agree with the table's own traces;
    // an inconsistency here means the trace pairing cannot satisfy the
    // displayed antisymmetry (it cannot, e.g., for odd n).
    for (LabelId i = 0; i < rank; ++i)
        for (LabelId j = 0; j < rank; ++j) {
            auto it = mult[i][j].find(top_label);
            Rat expected = (it != mult[i][j].end()) ? it->second : Rat(0);
            Nov got = Q.entry(i, j);
            Nov want = Nov::constant(expected, E);
            if (!(got - want).is_zero())
                throw FrobeniusError("trace pairing violates graded antisymmetry at (" +
                                     M->label(i) + "," + M->label(j) + ")");
        }
    int bad_degree = 0;
    if (!Q.is_nondegenerate(&bad_degree))
        throw FrobeniusError("trace degenerate on the degree-" + std::to_string(bad_degree) +
                             " pairing block");

    AInftyStructure S(M, cutoffs);
    MultilinearMap& m2 = S.op_mut(2);
    for (LabelId i = 0; i < rank; ++i)
        for (LabelId j = 0; j < rank; ++j) {
            if (mult[i][j].empty()) continue;
            long exponent = static_cast<long>(M->degree(i)) * (M->degree(j) + 1);
            Rat sign = ((exponent % 2) + 2) % 2 == 0 ? Rat(1) : Rat(-1);
            Element out(M, E);
            for (const auto& [id, c] : mult[i][j]) out.add_term(id, Nov::constant(sign * c, E));
            m2.set_entry({i, j}, out);
        }
    {
        MultilinearMap m = S.op(2);
        S.set_op(2, std::move(m));
    }

    auto rel = check_relations(S);
    auto cyc = check_cyclicity(S, Q, cutoffs.max_arity, E);
    if (!rel.empty() || !cyc.empty())
        throw FrobeniusError("frobenius structure failed checker verification (" +
                             std::to_string(rel.size()) + " relation, " + std::to_string(cyc.size()) +
                             " cyclicity violations)");
    return CyclicStructure{std::move(S), std::move(Q)};
}

// ---------------------------------------------------------------------------

std::pair<ModulePtr, CyclicPairing> poincare_model(const std::array<int, 5>& betti,
                                                   const std::vector<std::vector<Rat>>& intersection_form,
                                                   const std::vector<std::vector<Rat>>& deg13_pairing,
                                                   const Rat& cutoff) {
    if (betti[0] != betti[4] || betti[1] != betti[3])
        throw std::invalid_argument("poincare model needs b0=b4 and b1=b3");
    for (int b : betti)
        if (b < 0) throw std::invalid_argument("negative betti rank");

    auto expect_shape = [](const std::vector<std::vector<Rat>>& m, std::size_t r, std::size_t c,
                           const char* what) {
        if (m.size() != r) throw std::invalid_argument(std::string(what) + ": wrong row count");
        for (const auto& row : m)
            if (row.size() != c) throw std::invalid_argument(std::string(what) + ": wrong column count");
    };
    auto expect_integral = [](const std::vector<std::vector<Rat>>& m, const char* what) {
        for (const auto& row : m)
            for (const auto& v : row)
                if (!rat_is_integer(v)) throw std::invalid_argument(std::string(what) + ": integer entries required");
    };
    expect_shape(intersection_form, betti[2], betti[2], "intersection form");
    expect_shape(deg13_pairing, betti[1], betti[3], "degree 1-3 pairing");
    expect_integral(intersection_form, "intersection form");
    expect_integral(deg13_pairing, "degree 1-3 pairing");
    if (!is_symmetric(intersection_form))
        throw std::invalid_argument("intersection form must be symmetric");
    if (betti[2] > 0 && matrix_det(intersection_form) == 0)
        throw std::invalid_argument("intersection form is degenerate");
    if (betti[1] > 0 && matrix_det(deg13_pairing) == 0)
        throw std::invalid_argument("degree 1-3 pairing is degenerate");

    std::vector<std::pair<std::string, int>> basis;
    for (int d = 0; d <= 4; ++d)
        for (int i = 1; i <= betti[static_cast<std::size_t>(d)]; ++i)
            basis.emplace_back("e" + std::to_string(d) + "_" + std::to_string(i), d);
    auto M = std::make_shared<GradedModule>(std::move(basis));

    CyclicPairing Q(M, 4, cutoff);
    const auto& d0 = M->labels_of_degree(0);
    const auto& d1 = M->labels_of_degree(1);
    const auto& d2 = M->labels_of_degree(2);
    const auto& d3 = M->labels_of_degree(3);
    const auto& d4 = M->labels_of_degree(4);
    for (std::size_t i = 0; i < d0.size(); ++i) Q.set_entry(d0[i], d4[i], Rat(1));
    for (std::size_t i = 0; i < d2.size(); ++i)
        for (std::size_t j = i; j < d2.size(); ++j)
            if (intersection_form[i][j] != 0) Q.set_entry(d2[i], d2[j], intersection_form[i][j]);
    for (std::size_t i = 0; i < d1.size(); ++i)
        for (std::size_t j = 0; j < d3.size(); ++j)
            if (deg13_pairing[i][j] != 0) Q.set_entry(d1[i], d3[j], deg13_pairing[i][j]);
    return {M, std::move(Q)};
}

}  // namespace ainov
