#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>

namespace ellq {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// Extended Euclid: returns g = gcd(a,b) and (x,y) with a*x + b*y = g.
struct ExtGcd {
    Int g, x, y;
};
inline ExtGcd ext_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    return {a, x0, y0};
}

/// Exact rational p/q in lowest terms, q >= 1.  The slope (degree/rank)
/// of a bundle, and the workhorse scalar of all stratum combinatorics.
class Slope {
  public:
    Slope() : num_(0), den_(1) {}
    Slope(Int p, Int q) : num_(std::move(p)), den_(std::move(q)) { normalize(); }
    Slope(long p) : num_(p), den_(1) {}
    Slope(int p) : num_(p), den_(1) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Slope operator+(const Slope& o) const { return Slope(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Slope operator-(const Slope& o) const { return Slope(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Slope operator*(const Slope& o) const { return Slope(num_ * o.num_, den_ * o.den_); }
    Slope operator-() const { Slope s; s.num_ = -num_; s.den_ = den_; return s; }
    Slope reciprocal() const {
        if (num_ == 0) throw std::domain_error("reciprocal of zero");
        return Slope(den_, num_);
    }

    friend bool operator==(const Slope& a, const Slope& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
        Int l = a.num_ * b.den_, r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // floor of the rational value
    Int floor() const {
        Int q = num_ / den_, r = num_ % den_;
        if (r < 0) --q;
        return q;
    }
    Slope frac() const { return *this - Slope(floor(), 1); }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parse "p/q" or "p".
    static Slope parse(const std::string& text) {
        auto pos = text.find('/');
        if (pos == std::string::npos) return Slope(Int(text), 1);
        return Slope(Int(text.substr(0, pos)), Int(text.substr(pos + 1)));
    }

  private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero rank: slope denominator must be nonzero");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }
    Int num_, den_;
};

inline Slope slope_normalize(const Int& p, const Int& q) { return Slope(p, q); }

/// A point of the projective line over Q: a slope or the point at infinity.
/// Infinity is a value (Moebius images pass through it), never an error.
class ProjSlope {
  public:
    ProjSlope() : finite_(true), value_() {}
    ProjSlope(Slope s) : finite_(true), value_(std::move(s)) {}
    static ProjSlope infinity() { ProjSlope p; p.finite_ = false; return p; }

    bool is_finite() const { return finite_; }
    const Slope& value() const {
        if (!finite_) throw std::domain_error("projective point is infinite");
        return value_;
    }
    friend bool operator==(const ProjSlope& a, const ProjSlope& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    std::string str() const { return finite_ ? value_.str() : "inf"; }

  private:
    bool finite_;
    Slope value_;
};

}  // namespace ellq
