#pragma once

#include <nlohmann/json.hpp>
#include <vector>

#include "ellq/curve_point.hpp"
#include "ellq/rational.hpp"

namespace ellq {

/// Discrete type of an indecomposable bundle: degree n, rank k >= 1 and
/// the continuous parameter modeled as an exact curve point.
struct IndecType {
    Int degree;
    Int rank;
    CurvePoint param;

    IndecType(Int n, Int k, CurvePoint a = CurvePoint::zero())
        : degree(std::move(n)), rank(std::move(k)), param(std::move(a)) {
        if (rank < 1) throw std::domain_error("bundle rank must be positive");
    }

    Slope slope() const { return Slope(degree, rank); }
    /// gcd class c; the stable core is (degree/c, rank/c).
    Int gcd_class() const { return gcd(degree < 0 ? Int(-degree) : degree, rank); }

    friend bool operator==(const IndecType& a, const IndecType& b) = default;
};

inline IndecType dual(const IndecType& x) { return IndecType(-x.degree, x.rank, -x.param); }

/// dim Hom between indecomposables in the covered cases:
/// increasing slope -> n2 k1 - n1 k2; decreasing slope -> 0;
/// identical discrete type -> gcd class when the parameters agree, else 0.
/// Equal slope with distinct (degree, rank) is not covered and raises.
inline Int hom_dim(const IndecType& x, const IndecType& y) {
    Slope s1 = x.slope(), s2 = y.slope();
    if (s1 < s2) return y.degree * x.rank - x.degree * y.rank;
    if (s1 > s2) return 0;
    if (x.degree == y.degree && x.rank == y.rank)
        return x.param == y.param ? x.gcd_class() : 0;
    throw std::domain_error("hom dimension between same-slope types of different gcd class is not specified");
}

inline Int ext_dim(int i, const IndecType& x, const IndecType& y) {
    if (i == 0) return hom_dim(x, y);
    if (i == 1) return hom_dim(y, x);
    throw std::domain_error("ext index must be 0 or 1");
}

/// dim Ext^1(xi_{t2}, xi_{t1}) for slopes t1 < t2: n2 k1 - k2 n1.
inline Int w_space_dim(const Slope& t1, const Slope& t2) {
    if (!(t1 < t2)) throw std::domain_error("w_space_dim requires t1 < t2");
    return t2.num() * t1.den() - t2.den() * t1.num();
}

/// Duality transform on positive-degree indecomposables: (n,k,a) -> (-k,n,-a).
inline IndecType fourier_mukai(const IndecType& x) {
    if (x.degree <= 0) throw std::domain_error("transform stated for positive degree only");
    return IndecType(-x.rank, x.degree, -x.param);
}

/// Finite direct sum of indecomposables, kept sorted for canonical form.
struct BundleSum {
    std::vector<IndecType> components;

    explicit BundleSum(std::vector<IndecType> comps) : components(std::move(comps)) {
        if (components.empty()) throw std::domain_error("bundle sum must be nonempty");
        std::sort(components.begin(), components.end(), component_less);
    }
    static bool component_less(const IndecType& a, const IndecType& b) {
        if (auto c = a.slope() <=> b.slope(); c != 0) return c < 0;
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.param < b.param;
    }

    Int total_degree() const {
        Int s = 0;
        for (const auto& c : components) s += c.degree;
        return s;
    }
    Int total_rank() const {
        Int s = 0;
        for (const auto& c : components) s += c.rank;
        return s;
    }
    friend bool operator==(const BundleSum& a, const BundleSum& b) = default;
};

inline bool is_semistable(const BundleSum& b) {
    Slope s = b.components.front().slope();
    for (const auto& c : b.components)
        if (c.slope() != s) return false;
    return true;
}

inline bool is_stable(const BundleSum& b) {
    if (!is_semistable(b)) return false;
    for (const auto& c : b.components)
        if (c.gcd_class() != 1) return false;
    return true;
}

/// Translation action: each parameter shifts by beta scaled by the integer
/// n_i * (total rank) - k_i * (total degree); discrete data unchanged.
inline BundleSum t_action(const CurvePoint& beta, const BundleSum& b) {
    Int n = b.total_degree(), kp1 = b.total_rank();
    std::vector<IndecType> out;
    out.reserve(b.components.size());
    for (const auto& c : b.components) {
        Int mult = c.degree * kp1 - c.rank * n;
        out.emplace_back(c.degree, c.rank, c.param + beta * mult);
    }
    return BundleSum(std::move(out));
}

// --- JSON forms: {degree, rank, param:[x,y]}; sums as sorted arrays ---

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const IndecType& x) {
    ordered_json j;
    j["degree"] = x.degree.str();
    j["rank"] = x.rank.str();
    j["param"] = ordered_json::array({x.param.x.str(), x.param.y.str()});
    return j;
}

inline ordered_json to_json(const BundleSum& b) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : b.components) arr.push_back(to_json(c));
    return arr;
}

}  // namespace ellq
