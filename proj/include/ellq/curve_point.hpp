#pragma once

#include "ellq/rational.hpp"

namespace ellq {

/// Exact rational residue in [0, 1): the coordinate of a curve point
/// with respect to a fixed lattice basis.
class RatMod1 {
  public:
    RatMod1() : v_() {}
    RatMod1(Slope v) : v_(std::move(v)) { reduce(); }
    RatMod1(Int p, Int q) : v_(std::move(p), std::move(q)) { reduce(); }

    const Slope& value() const { return v_; }
    RatMod1 operator+(const RatMod1& o) const { return RatMod1(v_ + o.v_); }
    RatMod1 operator-() const { return RatMod1(-v_); }
    RatMod1 operator*(const Int& m) const { return RatMod1(v_ * Slope(m, 1)); }
    friend bool operator==(const RatMod1& a, const RatMod1& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const RatMod1& a, const RatMod1& b) { return a.v_ <=> b.v_; }
    std::string str() const { return v_.str(); }

  private:
    void reduce() { v_ = v_ - Slope(v_.floor(), 1); }
    Slope v_;
};

/// Point of the curve as (Q/Z)^2: componentwise group law, identity (0,0).
struct CurvePoint {
    RatMod1 x, y;

    CurvePoint operator+(const CurvePoint& o) const { return {x + o.x, y + o.y}; }
    CurvePoint operator-() const { return {-x, -y}; }
    CurvePoint operator*(const Int& m) const { return {x * m, y * m}; }
    friend bool operator==(const CurvePoint& a, const CurvePoint& b) = default;
    friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
    bool is_zero() const { return x == RatMod1() && y == RatMod1(); }

    static CurvePoint zero() { return {}; }
    /// "x,y" with exact rational coordinates.
    static CurvePoint parse(const std::string& text) {
        auto pos = text.find(',');
        if (pos == std::string::npos) throw std::domain_error("curve point needs two coordinates x,y");
        return {RatMod1(Slope::parse(text.substr(0, pos))), RatMod1(Slope::parse(text.substr(pos + 1)))};
    }
};

}  // namespace ellq
