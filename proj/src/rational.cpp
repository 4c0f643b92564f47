#include "ainov/rational.hpp"

#include <vector>

namespace ainov {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    // Accept only [-]digits[/digits]; anything else (decimals, spaces) is rejected.
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] >= '0' && s[i] <= '9') {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw std::invalid_argument("malformed rational literal: " + s);
        }
    }
    if (!digits) throw std::invalid_argument("malformed rational literal: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

std::optional<Rat> exact_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto num = exact_sqrt(Int(r.get_num()));
    auto den = exact_sqrt(Int(r.get_den()));
    if (!num || !den) return std::nullopt;
    Rat out(*num, *den);
    out.canonicalize();
    return out;
}

Int common_denominator(const std::vector<Rat>& values) {
    Int d = 1;
    for (const auto& v : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
    return d;
}

}  // namespace ainov
