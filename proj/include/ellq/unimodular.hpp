#pragma once

#include "ellq/rational.hpp"

namespace ellq {

/// Element of SL2(Z) acting on the projective line by fractional-linear maps.
struct UniMat {
    Int a, b, c, d;

    static UniMat identity() { return {1, 0, 0, 1}; }
    Int det() const { return a * d - b * c; }
    bool unimodular() const { return det() == 1; }

    UniMat operator*(const UniMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    UniMat inverse() const { return {d, -b, -c, a}; }

    friend bool operator==(const UniMat& x, const UniMat& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

inline ProjSlope mobius(const UniMat& g, const ProjSlope& s) {
    Int p, q;
    if (s.is_finite()) {
        p = s.value().num();
        q = s.value().den();
    } else {
        p = 1; q = 0;
    }
    Int np = g.a * p + g.b * q;
    Int nq = g.c * p + g.d * q;
    if (nq == 0) return ProjSlope::infinity();
    return ProjSlope(Slope(np, nq));
}

inline ProjSlope mobius(const UniMat& g, const Slope& s) { return mobius(g, ProjSlope(s)); }

/// g in SL2(Z) with g(t1) = 0 and 1 < g(t2) < infinity.  Exists exactly
/// when t1 < t2 and the pair is not unimodular (p2 q1 - p1 q2 >= 2);
/// a unimodular pair has image numerator 1, which cannot exceed 1.
inline UniMat normalizing_matrix(const Slope& t1, const Slope& t2) {
    if (!(t1 < t2)) throw std::domain_error("normalizing_matrix requires t1 < t2");
    const Int& p = t1.num();
    const Int& q = t1.den();
    Int det = t2.num() * q - p * t2.den();
    if (det == 1)
        throw std::domain_error("unimodular pair: no matrix sends t2 above 1 while killing t1");
    // q*r + p*s = 1
    ExtGcd e = ext_gcd(q, p);
    UniMat g0{q, -p, e.y, e.x};
    // image of t2 under g0 is det / b0 before the shear
    Int b0 = e.y * t2.num() + e.x * t2.den();
    // choose the shear [[1,0],[m,1]] with 0 < m*det + b0 < det;
    // det >= 2 and gcd(det, b0) = 1 make the residue nonzero, so m is unique
    Int r = ((b0 % det) + det) % det;
    Int m = (r - b0) / det;
    UniMat shear{1, 0, m, 1};
    return shear * g0;
}

}  // namespace ellq
