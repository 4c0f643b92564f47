#pragma once

// Test-side oracles, kept independent of the library's sparse composition
// paths: brute-force sign evaluation and a dense A-infinity relation
// evaluator built only on MultilinearMap::apply.

#include <vector>

#include "ainov/ainfty.hpp"

namespace oracles {

using namespace ainov;

/// (−1)^n by literal repeated multiplication.
inline int pow_minus_one(long n) {
    int s = 1;
    for (long i = 0; i < (n < 0 ? -n : n); ++i) s = -s;
    return s;
}

/// Insertion sign computed directly from the displayed exponent.
inline int insertion_sign_oracle(const std::vector<int>& degrees, int i) {
    long e = 0;
    for (int j = 0; j < i - 1; ++j) e += degrees[j];
    e += i - 1;
    return pow_minus_one(e);
}

inline int rotation_sign_oracle(int deg_x0, const std::vector<int>& rest) {
    long sum = 0;
    for (int d : rest) sum += d;
    sum += static_cast<long>(rest.size());
    return pow_minus_one(static_cast<long>(deg_x0 + 1) * sum);
}

/// Dense evaluation of the k-th A∞ relation on one basis tuple, composing
/// through Element arithmetic rather than entry bookkeeping.
inline Element naive_relation_residual(const AInftyStructure& S, int k,
                                       const std::vector<LabelId>& tuple) {
    const Rat& E = S.cutoffs().energy;
    Element residual(S.module(), E);
    for (int k2 = 0; k2 <= k; ++k2) {
        int k1 = k + 1 - k2;
        if (!S.has_op(k1) || !S.has_op(k2)) continue;
        for (int i = 1; i <= k1; ++i) {  // 1-based insertion slot
            std::vector<Element> inner_args;
            for (int j = i - 1; j < i - 1 + k2; ++j)
                inner_args.push_back(Element::basis(S.module(), tuple[j], E));
            Element inner = S.op(k2).apply(inner_args);

            std::vector<Element> outer_args;
            for (int j = 0; j < i - 1; ++j)
                outer_args.push_back(Element::basis(S.module(), tuple[j], E));
            outer_args.push_back(inner);
            for (int j = i - 1 + k2; j < k; ++j)
                outer_args.push_back(Element::basis(S.module(), tuple[j], E));

            std::vector<int> prefix;
            for (int j = 0; j < i - 1; ++j) prefix.push_back(S.module()->degree(tuple[j]));
            int sign = insertion_sign_oracle(prefix, i);

            if (inner.is_zero()) continue;
            if (!inner.is_homogeneous()) throw std::logic_error("oracle: inhomogeneous inner value");
            Element term = S.op(k1).apply(outer_args);
            if (sign < 0) term = -term;
            residual += term;
        }
    }
    return residual;
}

/// All-tuples dense check; returns the number of failing tuples.
inline int naive_relation_violations(const AInftyStructure& S, int K) {
    int failures = 0;
    std::size_t rank = S.module()->rank();
    for (int k = 0; k <= K; ++k) {
        std::vector<LabelId> tuple(static_cast<std::size_t>(k), 0);
        while (true) {
            if (!naive_relation_residual(S, k, tuple).is_zero()) ++failures;
            int pos = 0;
            while (pos < k && ++tuple[static_cast<std::size_t>(pos)] == rank) {
                tuple[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == k) break;
        }
    }
    return failures;
}

}  // namespace oracles
