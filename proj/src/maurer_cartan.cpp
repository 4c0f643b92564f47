#include "ainov/maurer_cartan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ainov/rng.hpp"

namespace ainov {

bool mc_verify(const AInftyStructure& S, const Element& b, const Rat& energy) {
    if (energy > S.cutoffs().energy)
        throw std::invalid_argument("verification energy exceeds the stored cutoff");
    return kuranishi_eval(S, b).is_zero_mod(energy);
}

bool mc_verify(const AInftyStructure& S, const Element& b) {
    return mc_verify(S, b, S.cutoffs().energy);
}

// ---------------------------------------------------------------------------

namespace {

struct EnergyKey {
    Rat lambda;
    int epow;
    bool operator<(const EnergyKey& o) const {
        if (lambda != o.lambda) return lambda < o.lambda;
        return epow < o.epow;
    }
    bool operator==(const EnergyKey& o) const { return lambda == o.lambda && epow == o.epow; }
};

std::optional<EnergyKey> leading_key(const Element& v) {
    std::optional<EnergyKey> best;
    for (const auto& [id, c] : v.terms()) {
        if (c.is_zero()) continue;
        const NovTerm& t = c.leading_term();
        EnergyKey key{t.lambda, t.epow};
        if (!best || key < *best) best = key;
    }
    return best;
}

/// Coefficient layer of an element at a fixed (λ, e), as polynomials indexed
/// by the given label list.
std::vector<Poly> layer_of(const Element& v, const std::vector<LabelId>& labels,
                           const EnergyKey& key) {
    std::vector<Poly> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Nov c = v.coeff(labels[i]);
        for (const auto& t : c.terms())
            if (t.lambda == key.lambda && t.epow == key.epow) out[i] = t.coeff;
    }
    return out;
}

}  // namespace

MCResult mc_solve_newton(const AInftyStructure& S, int max_steps) {
    const Rat& E = S.cutoffs().energy;
    const auto& M = *S.module();
    const auto& rows = M.labels_of_degree(2);
    const auto& cols = M.labels_of_degree(1);

    // Valuation-0, e^0 part of m₁ as a rational matrix A: A¹ → A².
    RatMatrix A(rows.size(), RatVector(cols.size(), Rat(0)));
    bool linearization_nonzero = false;
    if (S.has_op(1)) {
        const auto& m1 = S.op(1);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Element out = m1.entry({cols[j]});
            for (std::size_t i = 0; i < rows.size(); ++i) {
                Nov c = out.coeff(rows[i]);
                for (const auto& t : c.terms())
                    if (t.lambda == 0 && t.epow == 0) {
                        A[i][j] = t.coeff.constant_value();
                        if (A[i][j] != 0) linearization_nonzero = true;
                    }
            }
        }
    }

    Element b = Element::zero(S.module(), E);
    std::optional<EnergyKey> previous;
    for (int step = 0; step < max_steps; ++step) {
        Element residual = kuranishi_eval(S, b);
        if (residual.is_zero()) {
            if (!mc_verify(S, b)) return MCExhausted{"internal re-verification failed"};
            return MCSolution{b};
        }
        auto key = leading_key(residual);
        if (previous && !(*previous < *key))
            return MCExhausted{"no filtration progress (e-power mixing in the linearization)"};
        previous = key;

        std::vector<Poly> layer = layer_of(residual, rows, *key);
        RatVector rhs(rows.size(), Rat(0));
        for (std::size_t i = 0; i < rows.size(); ++i) rhs[i] = layer[i].constant_value();

        auto solution = solve_linear(A, rhs);
        if (!solution) {
            if (!linearization_nonzero)
                throw LinearizationNotSurjective(
                    "m1 has no valuation-0 part; newton mode cannot absorb the residual");
            Element cls(S.module(), E);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rhs[i] != 0) cls.add_term(rows[i], Nov::monomial(rhs[i], key->lambda, key->epow, E));
            return MCObstruction{key->lambda, cls};
        }
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if ((*solution)[j] == 0) continue;
            b.add_term(cols[j], Nov::monomial(-(*solution)[j], key->lambda, key->epow, E));
        }
        if (!b.is_plus())
            return MCExhausted{"correction left the maximal ideal (residual at energy 0)"};
    }
    return MCExhausted{"newton step budget exhausted"};
}

// ---------------------------------------------------------------------------

namespace {

struct AnsatzEquation {
    EnergyKey key;
    LabelId label;
    Poly poly;
};

struct AnsatzState {
    std::map<VarId, Rat> assignment;
};

/// Rational roots of a univariate polynomial of degree ≤ 2, descending.
std::optional<std::vector<Rat>> rational_roots(const std::vector<Rat>& coeffs) {
    std::vector<Rat> c = coeffs;
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.size() == 1) {
        if (c[0] == 0) return std::vector<Rat>{};  // identically zero: no constraint
        return std::nullopt;
    }
    if (c.size() == 2) return std::vector<Rat>{-c[0] / c[1]};
    if (c.size() == 3) {
        Rat disc = c[1] * c[1] - 4 * c[2] * c[0];
        auto root = exact_sqrt(disc);
        if (!root) return std::nullopt;  // no rational solution on this branch
        Rat r1 = (-c[1] + *root) / (2 * c[2]);
        Rat r2 = (-c[1] - *root) / (2 * c[2]);
        std::vector<Rat> out{std::max(r1, r2)};
        if (r1 != r2) out.push_back(std::min(r1, r2));
        return out;
    }
    return std::nullopt;  // degree > 2: outside the solver's contract
}

struct AnsatzOutcome {
    bool solved{false};
    std::map<VarId, Rat> assignment;
    std::optional<Rat> obstruction_energy;
    std::string exhausted_reason;
};

void ansatz_dfs(const std::vector<AnsatzEquation>& equations, AnsatzState state,
                AnsatzOutcome& outcome, int depth) {
    if (outcome.solved) return;
    if (depth > 64) {
        outcome.exhausted_reason = "branching depth exceeded";
        return;
    }

    // Substitution fixpoint: solve univariate stages until nothing changes.
    bool progress = true;
    std::vector<bool> done(equations.size(), false);
    while (progress) {
        progress = false;
        for (std::size_t idx = 0; idx < equations.size(); ++idx) {
            if (done[idx]) continue;
            Poly p = equations[idx].poly.eval(state.assignment);
            if (p.is_zero()) {
                done[idx] = true;
                continue;
            }
            if (p.is_constant()) {
                // Constant contradiction: no unknown can absorb this class.
                if (!outcome.obstruction_energy) outcome.obstruction_energy = equations[idx].key.lambda;
                return;
            }
            auto vars = p.variables();
            if (vars.size() == 1) {
                auto roots = rational_roots(p.univariate_coefficients(vars[0]));
                if (!roots) return;  // dead branch: no rational root
                if (roots->empty()) {
                    done[idx] = true;  // identically satisfiable (zero polynomial after pruning)
                    continue;
                }
                if (roots->size() == 1) {
                    state.assignment[vars[0]] = (*roots)[0];
                    done[idx] = true;
                    progress = true;
                    continue;
                }
                // Branch on the two roots, descending.
                for (const Rat& r : *roots) {
                    AnsatzState branch = state;
                    branch.assignment[vars[0]] = r;
                    ansatz_dfs(equations, std::move(branch), outcome, depth + 1);
                    if (outcome.solved) return;
                }
                return;
            }
        }
    }
    for (std::size_t idx = 0; idx < equations.size(); ++idx) {
        if (done[idx]) continue;
        Poly p = equations[idx].poly.eval(state.assignment);
        if (!p.is_zero()) {
            std::ostringstream os;
            os << "coupled multivariate stage at energy " << rat_to_string(equations[idx].key.lambda);
            outcome.exhausted_reason = os.str();
            return;
        }
    }
    outcome.solved = true;
    outcome.assignment = std::move(state.assignment);
}

}  // namespace

MCResult mc_solve_ansatz(const AInftyStructure& S, const std::vector<Rat>& grid) {
    const Rat& E = S.cutoffs().energy;
    if (grid.empty()) throw std::invalid_argument("ansatz mode needs a nonempty exponent grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] <= 0) throw std::invalid_argument("ansatz grid exponents must be positive");
        if (i > 0 && grid[i] <= grid[i - 1])
            throw std::invalid_argument("ansatz grid must be strictly increasing");
    }

    const auto& deg1 = S.module()->labels_of_degree(1);
    Element b_sym(S.module(), E);
    std::vector<std::pair<VarId, std::pair<std::size_t, LabelId>>> var_slots;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] >= E) continue;  // beyond the cutoff: cannot contribute
        for (LabelId u : deg1) {
            std::string name = "mc" + std::to_string(i) + "_" + S.module()->label(u);
            VarId var = VarPool::intern(name);
            var_slots.push_back({var, {i, u}});
            b_sym.add_term(u, Nov::monomial(Poly::variable(var), grid[i], 0, E));
        }
    }

    Element kappa = kuranishi_eval(S, b_sym);

    std::vector<AnsatzEquation> equations;
    for (const auto& [label, c] : kappa.terms())
        for (const auto& t : c.terms())
            equations.push_back(AnsatzEquation{EnergyKey{t.lambda, t.epow}, label, t.coeff});
    std::sort(equations.begin(), equations.end(), [](const AnsatzEquation& a, const AnsatzEquation& b) {
        if (!(a.key == b.key)) return a.key < b.key;
        return a.label < b.label;
    });

    AnsatzOutcome outcome;
    ansatz_dfs(equations, AnsatzState{}, outcome, 0);

    if (outcome.solved) {
        std::map<VarId, Rat> full = outcome.assignment;
        for (const auto& [var, slot] : var_slots)
            if (!full.count(var)) full[var] = Rat(0);  // unconstrained directions default to zero
        Element b = b_sym.eval(full);
        if (!mc_verify(S, b)) return MCExhausted{"ansatz re-verification failed"};
        return MCSolution{b};
    }
    if (outcome.obstruction_energy) {
        // Rebuild the obstruction class from the constant residuals at that energy.
        const Rat& lam = *outcome.obstruction_energy;
        Element cls(S.module(), E);
        for (const auto& eq : equations) {
            if (eq.key.lambda != lam) continue;
            Poly p = eq.poly;  // report the unsubstituted stage residual
            if (p.is_constant() && !p.is_zero())
                cls.add_term(eq.label, Nov::monomial(p.constant_value(), lam, eq.key.epow, E));
        }
        return MCObstruction{lam, cls};
    }
    if (!outcome.exhausted_reason.empty()) return MCExhausted{outcome.exhausted_reason};
    return MCExhausted{"ansatz grid consumed without a solution"};
}

// ---------------------------------------------------------------------------

IsotropyCertificate zero_from_isotropy(const RatMatrix& q_block,
                                       const std::vector<LabelId>& block_labels, const Element& v) {
    if (q_block.size() != block_labels.size())
        throw std::invalid_argument("isotropy block shape mismatch");
    if (definiteness(q_block) == 0)
        throw std::invalid_argument("isotropy certificate requires a definite block");
    for (const auto& [id, c] : v.terms())
        if (std::find(block_labels.begin(), block_labels.end(), id) == block_labels.end())
            throw std::invalid_argument("element has support outside the pairing block");

    // Precondition Q(v,v) = 0, computed exactly.
    Nov qvv = Nov::zero(v.cutoff());
    for (std::size_t i = 0; i < block_labels.size(); ++i)
        for (std::size_t j = 0; j < block_labels.size(); ++j) {
            if (q_block[i][j] == 0) continue;
            Nov prod = v.coeff(block_labels[i]) * v.coeff(block_labels[j]);
            prod *= q_block[i][j];
            qvv += prod;
        }
    if (!qvv.is_zero())
        throw std::invalid_argument("rejected input: Q(v,v) = " + qvv.to_string() + " is nonzero");

    IsotropyCertificate cert;
    Element working = v;
    while (!working.is_zero()) {
        auto key = leading_key(working);
        std::vector<Poly> w = layer_of(working, block_labels, *key);
        Poly qww;
        for (std::size_t i = 0; i < block_labels.size(); ++i)
            for (std::size_t j = 0; j < block_labels.size(); ++j) {
                if (q_block[i][j] == 0) continue;
                Poly p = w[i] * w[j];
                p *= q_block[i][j];
                qww += p;
            }
        // The (2λ, 2e) layer of Q(v,v) is exactly Q_block(w,w); Q(v,v)=0 and
        // definiteness force w = 0, contradicting its extraction as a nonzero
        // leading layer. Reaching this point is a theorem-violation incident.
        cert.steps.push_back(IsotropyStep{
            key->lambda, key->epow,
            "nonzero leading layer with Q_block(w,w) = " + qww.to_string()});
        cert.certified = false;
        cert.message = "definiteness contradiction: nonzero leading layer at T^(" +
                       rat_to_string(key->lambda) + ")*e^" + std::to_string(key->epow);
        return cert;
    }
    cert.certified = true;
    cert.message = "element is zero; isotropy induction complete";
    return cert;
}

// ---------------------------------------------------------------------------

namespace {

Element random_plus_point(const AInftyStructure& S, Rng& rng) {
    const Rat& E = S.cutoffs().energy;
    const auto& deg1 = S.module()->labels_of_degree(1);
    std::vector<Rat> lambdas{Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)};
    Element b(S.module(), E);
    for (LabelId u : deg1) {
        int terms = rng.range(0, 2);
        for (int t = 0; t < terms; ++t) {
            Rat lam = rng.pick(lambdas);
            if (lam >= E) continue;
            b.add_term(u, Nov::monomial(rng.small_rational(), lam, 0, E));
        }
    }
    return b;
}

}  // namespace

UnobstructednessReport unobstructedness_certificate(const CyclicStructure& CS, const Element& b,
                                                    int samples, std::uint64_t seed) {
    const AInftyStructure& S = CS.S;
    const CyclicPairing& Q = CS.Q;
    if (Q.n() != 4) throw std::invalid_argument("unobstructedness certificate needs n = 4");

    UnobstructednessReport report;
    report.cutoffs = S.cutoffs();
    report.symbolic_weight = S.cutoffs().energy / (S.cutoffs().max_arity + 1);

    const auto& deg2 = S.module()->labels_of_degree(2);
    RatMatrix block = Q.block(2);
    int defin = definiteness(block);
    if (defin == 0)
        throw std::invalid_argument("degree-2 pairing block is not definite");
    if (!mc_verify(S, b)) throw std::invalid_argument("b is not a verified Maurer-Cartan element");

    auto push = [&](const std::string& name, bool pass, const std::string& detail) {
        report.steps.push_back(CertificateStep{name, pass, detail});
    };
    push("definiteness", true, std::string(defin > 0 ? "positive" : "negative") + " definite degree-2 block");
    push("mc_verify", true, "kappa(b) = 0 mod cutoffs");

    auto certify_structure = [&](const AInftyStructure& T, const std::string& tag) -> bool {
        Element m0 = T.curvature();
        Nov qm0 = Q.pair(m0, m0);
        bool ok = true;

        bool m0_isotropic = qm0.is_zero();
        push(tag + ": Q(m0,m0) = 0", m0_isotropic, qm0.to_string());
        ok = ok && m0_isotropic;

        Element kappa = kuranishi_symbolic(T, default_symbolic_directions(T, report.symbolic_weight));
        Nov defect = Q.pair(kappa, kappa) - qm0;
        bool darboux_ok = defect.is_zero();
        push(tag + ": Q(kappa,kappa) = Q(m0,m0) symbolically", darboux_ok, defect.to_string());
        ok = ok && darboux_ok;

        if (ok) {
            IsotropyCertificate iso = zero_from_isotropy(block, deg2, kappa);
            push(tag + ": isotropy forces kappa = 0", iso.certified, iso.message);
            ok = ok && iso.certified;
        }
        bool vanished = kappa.is_zero();
        push(tag + ": symbolic kappa residual", vanished,
             vanished ? "0" : kappa.to_string());
        return ok && vanished;
    };

    bool all = certify_structure(S, "base");

    Rng rng(seed);
    for (int j = 1; j <= samples; ++j) {
        Element bprime = random_plus_point(S, rng);
        AInftyStructure T = twist(S, bprime);
        Element curv = T.curvature();
        bool curv_zero = curv.is_zero();
        push("sample " + std::to_string(j) + ": kappa(b') = 0", curv_zero,
             curv_zero ? "0" : curv.to_string());
        bool sample_ok = curv_zero && certify_structure(T, "sample " + std::to_string(j));
        all = all && sample_ok;
    }

    report.certified = all;
    return report;
}

}  // namespace ainov
