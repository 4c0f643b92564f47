#include "ainov/ainfty.hpp"

#include <algorithm>

namespace ainov {

AInftyStructure::AInftyStructure(ModulePtr module, const Cutoffs& cutoffs)
    : module_(std::move(module)), cutoffs_(cutoffs) {
    if (!module_) throw std::invalid_argument("structure requires a module");
}

const MultilinearMap& AInftyStructure::op(int arity) const {
    auto it = ops_.find(arity);
    if (it == ops_.end()) throw std::out_of_range("no operation of arity " + std::to_string(arity));
    return it->second;
}

void AInftyStructure::set_op(int arity, MultilinearMap m) {
    if (arity < 0 || arity > cutoffs_.max_arity)
        throw std::invalid_argument("operation arity exceeds the arity cutoff");
    if (m.arity() != arity) throw std::invalid_argument("map arity disagrees with slot");
    if (m.degree_shift() != 2 - arity)
        throw std::invalid_argument("m_" + std::to_string(arity) + " must have degree shift " +
                                    std::to_string(2 - arity));
    if (m.cutoff() != cutoffs_.energy) throw CutoffMismatch("operation cutoff mismatch");
    if (!(*m.module() == *module_)) throw std::invalid_argument("operation module mismatch");
    if (arity == 0) {
        for (const auto& [inputs, out] : m.entries())
            if (!out.is_plus())
                throw std::invalid_argument("m_0 structure constants must lie in the maximal ideal");
    }
    if (m.is_zero())
        ops_.erase(arity);
    else
        ops_.insert_or_assign(arity, std::move(m));
}

MultilinearMap& AInftyStructure::op_mut(int arity) {
    if (arity < 0 || arity > cutoffs_.max_arity)
        throw std::invalid_argument("operation arity exceeds the arity cutoff");
    auto it = ops_.find(arity);
    if (it == ops_.end())
        it = ops_.emplace(arity, MultilinearMap(module_, arity, 2 - arity, cutoffs_.energy)).first;
    return it->second;
}

Element AInftyStructure::curvature() const {
    auto it = ops_.find(0);
    if (it == ops_.end()) return Element::zero(module_, cutoffs_.energy);
    return it->second.entry({});
}

bool AInftyStructure::operator==(const AInftyStructure& o) const {
    return *module_ == *o.module_ && cutoffs_ == o.cutoffs_ && ops_ == o.ops_;
}

// ---------------------------------------------------------------------------

std::vector<RelationViolation> check_relations(const AInftyStructure& S, int K, const Rat& energy) {
    if (K > S.cutoffs().max_arity || energy > S.cutoffs().energy)
        throw std::invalid_argument("relation check cutoffs exceed the stored structure's cutoffs");

    std::vector<RelationViolation> violations;
    for (int k = 0; k <= K; ++k) {
        std::map<std::vector<LabelId>, Element> residuals;

        for (int k2 = 0; k2 <= k; ++k2) {
            int k1 = k + 1 - k2;
            if (k1 > S.cutoffs().max_arity) continue;
            if (!S.has_op(k1) || !S.has_op(k2)) continue;
            const auto& outer = S.op(k1);
            const auto& inner = S.op(k2);

            // Outer entries indexed by (slot, label at slot): composition is
            // driven entirely by the sparse supports.
            std::map<std::pair<int, LabelId>, std::vector<const std::pair<const std::vector<LabelId>, Element>*>>
                by_slot;
            for (const auto& entry : outer.entries())
                for (int i = 0; i < k1; ++i) by_slot[{i, entry.first[i]}].push_back(&entry);

            for (const auto& [t_in, e_in] : inner.entries()) {
                for (const auto& [label, c] : e_in.terms()) {
                    for (int i = 0; i < k1; ++i) {
                        auto hit = by_slot.find({i, label});
                        if (hit == by_slot.end()) continue;
                        for (const auto* outer_entry : hit->second) {
                            const auto& t_out = outer_entry->first;
                            std::vector<int> prefix_degrees(i);
                            for (int j = 0; j < i; ++j)
                                prefix_degrees[j] = S.module()->degree(t_out[j]);
                            int sign = insertion_sign(prefix_degrees, i + 1);

                            std::vector<LabelId> composed;
                            composed.reserve(k);
                            composed.insert(composed.end(), t_out.begin(), t_out.begin() + i);
                            composed.insert(composed.end(), t_in.begin(), t_in.end());
                            composed.insert(composed.end(), t_out.begin() + i + 1, t_out.end());

                            Element contribution = outer_entry->second.scaled(c);
                            if (sign < 0) contribution = -contribution;
                            auto it = residuals.find(composed);
                            if (it == residuals.end())
                                residuals.emplace(std::move(composed), std::move(contribution));
                            else
                                it->second += contribution;
                        }
                    }
                }
            }
        }

        for (const auto& [inputs, residual] : residuals) {
            if (!residual.is_zero_mod(energy))
                violations.push_back(RelationViolation{k, inputs, residual.truncated(energy)});
        }
    }
    return violations;
}

std::vector<RelationViolation> check_relations(const AInftyStructure& S) {
    return check_relations(S, S.cutoffs().max_arity, S.cutoffs().energy);
}

// ---------------------------------------------------------------------------

namespace {

void check_mc_argument(const AInftyStructure& S, const Element& x, const char* role) {
    if (!(*x.module() == *S.module()))
        throw std::invalid_argument(std::string(role) + " lives on a different module");
    if (x.cutoff() != S.cutoffs().energy) throw CutoffMismatch(std::string(role) + " cutoff mismatch");
    if (!x.is_zero()) {
        auto d = x.degree();
        if (!d || *d != 1)
            throw std::invalid_argument(std::string(role) + " must be homogeneous of degree 1");
    }
    if (!x.is_plus())
        throw std::invalid_argument(std::string(role) + " has a valuation-0 coefficient (not in Λ⁺)");
}

}  // namespace

Element kuranishi_eval(const AInftyStructure& S, const Element& x) {
    check_mc_argument(S, x, "Kuranishi argument");
    const Rat& E = S.cutoffs().energy;
    Element result = Element::zero(S.module(), E);
    auto val = x.valuation();
    for (int k = 0; k <= S.cutoffs().max_arity; ++k) {
        if (!S.has_op(k)) continue;
        if (k > 0 && x.is_zero()) break;
        if (k > 0 && val && Rat(k) * *val >= E) break;  // all later arities are ≥ as deep
        result += S.op(k).apply(std::vector<Element>(static_cast<std::size_t>(k), x));
    }
    return result;
}

Element symbolic_point(const AInftyStructure& S, const std::vector<SymbolicDirection>& dirs) {
    Element x = Element::zero(S.module(), S.cutoffs().energy);
    for (const auto& d : dirs) {
        if (d.weight <= 0) throw std::invalid_argument("symbolic energy weight must be positive");
        x.add_term(d.direction, Nov::monomial(Poly::variable(d.var), d.weight, 0, S.cutoffs().energy));
    }
    return x;
}

std::vector<SymbolicDirection> default_symbolic_directions(const AInftyStructure& S, const Rat& weight) {
    std::vector<SymbolicDirection> dirs;
    for (LabelId id : S.module()->labels_of_degree(1))
        dirs.push_back(SymbolicDirection{id, "c_" + S.module()->label(id), weight});
    return dirs;
}

std::vector<SymbolicDirection> default_symbolic_directions(const AInftyStructure& S) {
    Rat weight = S.cutoffs().energy / (S.cutoffs().max_arity + 1);
    return default_symbolic_directions(S, weight);
}

Element kuranishi_symbolic(const AInftyStructure& S, const std::vector<SymbolicDirection>& dirs) {
    std::map<LabelId, int> seen;
    for (const auto& d : dirs) {
        if (S.module()->degree(d.direction) != 1)
            throw std::invalid_argument("symbolic direction " + S.module()->label(d.direction) +
                                        " is not of degree 1");
        if (++seen[d.direction] > 1)
            throw std::invalid_argument("duplicate symbolic direction " +
                                        S.module()->label(d.direction));
    }
    for (LabelId id : S.module()->labels_of_degree(1))
        if (!seen.count(id))
            throw std::invalid_argument("missing deformation variable for degree-1 direction " +
                                        S.module()->label(id));
    return kuranishi_eval(S, symbolic_point(S, dirs));
}

// ---------------------------------------------------------------------------

AInftyStructure twist(const AInftyStructure& S, const Element& b) {
    check_mc_argument(S, b, "twisting element");

    AInftyStructure T(S.module(), S.cutoffs());
    for (const auto& [n, m_n] : S.ops()) {
        for (const auto& [tuple, out] : m_n.entries()) {
            // Positions whose label lies in supp(b) may absorb a copy of b;
            // all others must stay argument slots.
            std::vector<int> absorbable;
            for (int p = 0; p < n; ++p)
                if (!b.coeff(tuple[p]).is_zero()) absorbable.push_back(p);

            int m = static_cast<int>(absorbable.size());
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                Nov scale = Nov::constant(Rat(1), S.cutoffs().energy);
                std::vector<bool> is_b(static_cast<std::size_t>(n), false);
                for (int j = 0; j < m; ++j)
                    if (mask & (1u << j)) {
                        is_b[absorbable[j]] = true;
                        scale = scale * b.coeff(tuple[absorbable[j]]);
                    }
                if (scale.is_zero()) continue;

                std::vector<LabelId> rest;
                rest.reserve(static_cast<std::size_t>(n));
                for (int p = 0; p < n; ++p)
                    if (!is_b[p]) rest.push_back(tuple[p]);

                Element contribution = out.scaled(scale);
                if (contribution.is_zero()) continue;
                T.op_mut(static_cast<int>(rest.size())).add_to_entry(rest, contribution);
            }
        }
    }
    // Normalize empty maps away and re-run the m₀ gappedness check.
    std::vector<int> arities;
    for (const auto& [k, m] : T.ops()) arities.push_back(k);
    for (int k : arities) {
        MultilinearMap m = T.op(k);
        T.set_op(k, std::move(m));
    }
    return T;
}

}  // namespace ainov
