#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "strandlab/errors.hpp"

namespace strandlab {

/// Exact rational on int64 with 128-bit intermediates. Heights and the planar
/// predicates built from them stay tiny, so no arbitrary precision is needed.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw invalid_input_error("rational with zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(chk(i128(num_) * o.den_ + i128(o.num_) * den_),
                        chk(i128(den_) * o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(chk(i128(num_) * o.den_ - i128(o.num_) * den_),
                        chk(i128(den_) * o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(chk(i128(num_) * o.num_), chk(i128(den_) * o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw invalid_input_error("rational division by zero");
        return Rational(chk(i128(num_) * o.den_), chk(i128(den_) * o.num_));
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return i128(num_) * o.den_ < i128(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw invalid_input_error("cannot parse rational \"" + s + "\"");
        }
    }

private:
    using i128 = __int128;

    static long long chk(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw internal_invariant_error("rational overflow");
        return static_cast<long long>(v);
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

struct RPoint {
    Rational x;
    Rational y;
};

/// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
inline int orientation(const RPoint& a, const RPoint& b, const RPoint& c) {
    Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v.sign();
}

inline bool point_on_segment(const RPoint& p, const RPoint& a, const RPoint& b) {
    if (orientation(a, b, p) != 0) return false;
    auto between = [](const Rational& lo, const Rational& v, const Rational& hi) {
        return (lo <= v && v <= hi) || (hi <= v && v <= lo);
    };
    return between(a.x, p.x, b.x) && between(a.y, p.y, b.y);
}

/// True when closed segments [a,b] and [c,d] meet anywhere other than a
/// shared endpoint of the two.
inline bool segments_meet_off_endpoints(const RPoint& a, const RPoint& b,
                                        const RPoint& c, const RPoint& d) {
    auto same = [](const RPoint& p, const RPoint& q) { return p.x == q.x && p.y == q.y; };
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
    auto bad_touch = [&](const RPoint& p, const RPoint& s1, const RPoint& s2,
                         const RPoint& other_end) {
        // p is an endpoint of one segment lying on the other segment
        (void)other_end;
        if (!point_on_segment(p, s1, s2)) return false;
        return !(same(p, s1) || same(p, s2));
    };
    if (bad_touch(c, a, b, d)) return true;
    if (bad_touch(d, a, b, c)) return true;
    if (bad_touch(a, c, d, b)) return true;
    if (bad_touch(b, c, d, a)) return true;
    // collinear overlap with matching endpoints is covered by the touch cases
    return false;
}

/// Height of the line through (x0,y0),(x1,y1) at abscissa x (x0 != x1).
inline Rational line_height_at(const Rational& x0, const Rational& y0, const Rational& x1,
                               const Rational& y1, const Rational& x) {
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

} // namespace strandlab
