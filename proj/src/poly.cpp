#include "ainov/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ainov {

namespace {
std::mutex pool_mutex;
std::vector<std::string>& pool_names() {
    static std::vector<std::string> names;
    return names;
}
std::map<std::string, VarId>& pool_index() {
    static std::map<std::string, VarId> index;
    return index;
}
}  // namespace

VarId VarPool::intern(const std::string& name) {
    std::lock_guard<std::mutex> lock(pool_mutex);
    auto it = pool_index().find(name);
    if (it != pool_index().end()) return it->second;
    VarId id = static_cast<VarId>(pool_names().size());
    pool_names().push_back(name);
    pool_index().emplace(name, id);
    return id;
}

const std::string& VarPool::name(VarId id) {
    std::lock_guard<std::mutex> lock(pool_mutex);
    return pool_names().at(id);
}

bool Monomial::operator<(const Monomial& o) const {
    // Graded order first, then lex on (var, exp) pairs: stable and canonical.
    int da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    return factors < o.factors;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : factors) d += static_cast<int>(e);
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors.begin(), j = b.factors.begin();
    while (i != a.factors.end() && j != b.factors.end()) {
        if (i->first < j->first) {
            out.factors.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors.push_back(*j++);
        } else {
            out.factors.emplace_back(i->first, i->second + j->second);
            ++i, ++j;
        }
    }
    out.factors.insert(out.factors.end(), i, a.factors.end());
    out.factors.insert(out.factors.end(), j, b.factors.end());
    return out;
}

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(Monomial::one(), c);
    return p;
}

Poly Poly::variable(VarId v) {
    Poly p;
    Monomial m;
    m.factors.emplace_back(v, 1u);
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void Poly::prune(const Monomial& m) {
    auto it = terms_.find(m);
    if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        terms_[m] += c;
        prune(m);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        terms_[m] -= c;
        prune(m);
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma * mb;
            out.terms_[m] += ca * cb;
            out.prune(m);
        }
    return out;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::eval(const std::map<VarId, Rat>& assignment) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Rat scale = c;
        Monomial rest;
        for (const auto& [v, e] : m.factors) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                rest.factors.emplace_back(v, e);
            } else {
                for (unsigned k = 0; k < e; ++k) scale *= it->second;
            }
        }
        out.terms_[rest] += scale;
        out.prune(rest);
    }
    return out;
}

std::vector<VarId> Poly::variables() const {
    std::vector<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::vector<Rat> Poly::univariate_coefficients(VarId v) const {
    std::vector<Rat> coeffs;
    for (const auto& [m, c] : terms_) {
        unsigned deg = 0;
        for (const auto& [w, e] : m.factors) {
            if (w != v) throw std::logic_error("polynomial not univariate in requested variable");
            deg = e;
        }
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
        coeffs[deg] = c;
    }
    if (coeffs.empty()) coeffs.push_back(Rat(0));
    return coeffs;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        bool printed_coeff = false;
        if (a != 1 || m.factors.empty()) {
            os << rat_to_string(a);
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            if (printed_coeff || i > 0) os << "*";
            os << VarPool::name(m.factors[i].first);
            if (m.factors[i].second > 1) os << "^" << m.factors[i].second;
            printed_coeff = true;
        }
    }
    return os.str();
}

}  // namespace ainov
