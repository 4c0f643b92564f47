#include "ainov/novikov.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ainov {

namespace {
bool key_less(const NovTerm& t, const std::pair<Rat, int>& key) {
    if (t.lambda != key.first) return t.lambda < key.first;
    return t.epow < key.second;
}
}  // namespace

Nov::Nov(const Rat& cutoff) : cutoff_(cutoff) {
    if (cutoff <= 0) throw std::invalid_argument("energy cutoff must be positive");
}

Nov Nov::constant(const Rat& c, const Rat& cutoff) {
    return monomial(Poly::constant(c), Rat(0), 0, cutoff);
}

Nov Nov::monomial(const Poly& coeff, const Rat& lambda, int epow, const Rat& cutoff) {
    Nov out(cutoff);
    if (lambda < 0) throw std::invalid_argument("negative energy exponent");
    out.add_term(lambda, epow, coeff);
    return out;
}

void Nov::add_term(const Rat& lambda, int epow, const Poly& coeff) {
    if (coeff.is_zero() || lambda >= cutoff_) return;
    auto key = std::make_pair(lambda, epow);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
    if (it != terms_.end() && it->lambda == lambda && it->epow == epow) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, NovTerm{lambda, epow, coeff});
    }
}

void Nov::require_same_cutoff(const Nov& o) const {
    if (cutoff_ != o.cutoff_)
        throw CutoffMismatch("cutoff mismatch: " + rat_to_string(cutoff_) + " vs " +
                             rat_to_string(o.cutoff_));
}

bool Nov::is_zero_mod(const Rat& energy) const {
    for (const auto& t : terms_)
        if (t.lambda < energy) return false;
    return true;
}

std::optional<Rat> Nov::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().lambda;
}

bool Nov::is_plus() const {
    return terms_.empty() || terms_.front().lambda > 0;
}

const NovTerm& Nov::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero scalar");
    return terms_.front();
}

bool Nov::is_constant_coefficients() const {
    for (const auto& t : terms_)
        if (!t.coeff.is_constant()) return false;
    return true;
}

Nov Nov::operator-() const {
    Nov out(cutoff_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(NovTerm{t.lambda, t.epow, -t.coeff});
    return out;
}

Nov& Nov::operator+=(const Nov& o) {
    require_same_cutoff(o);
    for (const auto& t : o.terms_) add_term(t.lambda, t.epow, t.coeff);
    return *this;
}

Nov& Nov::operator-=(const Nov& o) {
    require_same_cutoff(o);
    for (const auto& t : o.terms_) add_term(t.lambda, t.epow, -t.coeff);
    return *this;
}

Nov operator*(const Nov& a, const Nov& b) {
    a.require_same_cutoff(b);
    Nov out(a.cutoff_);
    for (const auto& s : a.terms_) {
        Rat lam = s.lambda;
        for (const auto& t : b.terms_) {
            Rat l = lam + t.lambda;
            if (l >= a.cutoff_) continue;  // b terms are sorted, but e-powers interleave; keep scanning
            out.add_term(l, s.epow + t.epow, s.coeff * t.coeff);
        }
    }
    return out;
}

Nov& Nov::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Nov& Nov::operator*=(const Poly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    std::vector<NovTerm> old;
    old.swap(terms_);
    for (const auto& t : old) add_term(t.lambda, t.epow, t.coeff * c);
    return *this;
}

Nov Nov::eval(const std::map<VarId, Rat>& assignment) const {
    Nov out(cutoff_);
    for (const auto& t : terms_) out.add_term(t.lambda, t.epow, t.coeff.eval(assignment));
    return out;
}

Nov Nov::truncated(const Rat& new_cutoff) const {
    if (new_cutoff > cutoff_)
        throw std::invalid_argument("cannot extend a truncated scalar beyond its cutoff");
    Nov out(new_cutoff);
    for (const auto& t : terms_) out.add_term(t.lambda, t.epow, t.coeff);
    return out;
}

std::string Nov::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string coeff_text;
        bool negative = false;
        if (t.coeff.is_constant()) {
            Rat c = t.coeff.constant_value();
            negative = c < 0;
            coeff_text = rat_to_string(abs(c));
        } else {
            coeff_text = "(" + t.coeff.to_string() + ")";
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        os << coeff_text;
        if (t.lambda != 0) os << "*T^(" << rat_to_string(t.lambda) << ")";
        if (t.epow != 0) os << "*e^" << t.epow;
    }
    return os.str();
}

namespace {

struct Scanner {
    const std::string& s;
    std::size_t pos{0};

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw std::invalid_argument(std::string("expected '") + c + "' in scalar at offset " +
                                        std::to_string(pos));
    }

    std::string read_number(bool allow_slash) {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        bool digits = false;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || (allow_slash && s[pos] == '/'))) {
            digits = digits || std::isdigit(static_cast<unsigned char>(s[pos]));
            ++pos;
        }
        if (!digits)
            throw std::invalid_argument("expected number in scalar at offset " + std::to_string(start));
        return s.substr(start, pos - start);
    }
};

}  // namespace

Nov Nov::parse(const std::string& text, const Rat& cutoff) {
    Scanner sc{text};
    Nov out(cutoff);
    if (sc.done()) throw std::invalid_argument("empty scalar literal");
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.consume('-')) {
            sign = -1;
        } else if (sc.consume('+')) {
            if (first) throw std::invalid_argument("scalar may not start with '+'");
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between scalar terms");
        }
        first = false;

        std::optional<Rat> coeff;
        std::optional<Rat> lambda;
        std::optional<int> epow;
        bool factor_expected = true;
        while (factor_expected) {
            char c = sc.peek();
            if (c == 'T') {
                if (lambda) throw std::invalid_argument("duplicate T factor in scalar term");
                ++sc.pos;
                sc.expect('^');
                sc.expect('(');
                Rat l = rat_from_string(sc.read_number(true));
                sc.expect(')');
                if (l < 0) throw std::invalid_argument("negative energy exponent");
                lambda = l;
            } else if (c == 'e') {
                if (epow) throw std::invalid_argument("duplicate e factor in scalar term");
                ++sc.pos;
                sc.expect('^');
                epow = static_cast<int>(std::stol(sc.read_number(false)));
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                if (coeff) throw std::invalid_argument("duplicate coefficient in scalar term");
                coeff = rat_from_string(sc.read_number(true));
            } else {
                throw std::invalid_argument(std::string("unexpected character '") + c +
                                            "' in scalar at offset " + std::to_string(sc.pos));
            }
            factor_expected = sc.consume('*');
        }
        Rat c = coeff.value_or(Rat(1)) * sign;
        out.add_term(lambda.value_or(Rat(0)), epow.value_or(0), Poly::constant(c));
    }
    return out;
}

}  // namespace ainov
