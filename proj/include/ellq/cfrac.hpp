#pragma once

#include <vector>

#include "ellq/rational.hpp"

namespace ellq {

/// Negative (Hirzebruch-Jung) continued fraction
///   (n_1,...,n_t) = n_1 - 1/(n_2 - 1/(... - 1/n_t)).
/// Canonical expansions have every term >= 2; a final term equal to 1 is
/// allowed so truncated tails (n_1,...,n_t - 1) stay evaluable.
struct CFrac {
    std::vector<Int> terms;
};

/// Exact nested evaluation, innermost term first.
inline Slope eval_cfrac(const CFrac& c) {
    if (c.terms.empty()) throw std::domain_error("empty continued fraction");
    Slope acc(c.terms.back(), 1);
    for (auto it = c.terms.rbegin() + 1; it != c.terms.rend(); ++it) {
        if (acc.num() == 0) throw std::domain_error("degenerate truncation: division by zero in continued fraction");
        acc = Slope(*it, 1) - acc.reciprocal();
    }
    return acc;
}

/// Unique expansion of a rational s > 1 with all terms >= 2
/// (n_i = ceil of the current remainder).  Also accepts 0 < s <= 1 only
/// when it happens to terminate with admissible terms, which it never
/// does; such inputs raise.
inline CFrac to_cfrac(const Slope& s) {
    if (s <= Slope(0)) throw std::domain_error("continued fraction defined for positive slopes only");
    CFrac out;
    Int p = s.num(), q = s.den();
    while (q != 0) {
        // ceil(p/q)
        Int n = p / q;
        if (p % q != 0) ++n;
        out.terms.push_back(n);
        // next value: q / (n q - p)
        Int np = q, nq = n * q - p;
        p = np; q = nq;
    }
    for (size_t i = 0; i < out.terms.size(); ++i) {
        if (out.terms[i] < 2)
            throw std::domain_error("slope has no admissible expansion (must be > 1)");
    }
    return out;
}

/// The truncated-and-decremented prefix (n_1,...,n_j - 1).
inline CFrac decremented_prefix(const CFrac& c, size_t j) {
    CFrac out;
    out.terms.assign(c.terms.begin(), c.terms.begin() + j);
    out.terms.back() -= 1;
    return out;
}

}  // namespace ellq
