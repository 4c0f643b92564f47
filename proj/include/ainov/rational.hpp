#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ainov {

using Rat = mpq_class;
using Int = mpz_class;

/// Parse an exact rational from a decimal-free "p/q" or "p" string.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

/// Canonical rendering: "p/q" with q > 0 and gcd(p,q)=1, or "p" when q=1.
std::string rat_to_string(const Rat& r);

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

/// Canonicalized fraction. The two-argument mpq_class constructor does not
/// reduce, and GMP comparisons assume canonical form, so computed
/// numerator/denominator pairs must go through here.
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Exact integer square root: returns the root when n is a perfect square.
std::optional<Int> exact_sqrt(const Int& n);

/// Exact rational square root when the value is a perfect square of a rational.
std::optional<Rat> exact_sqrt(const Rat& r);

inline int sign_of(const Rat& r) { return sgn(r); }

/// Common denominator of a positive rational set, used to bound filtration steps.
Int common_denominator(const std::vector<Rat>& values);

}  // namespace ainov
