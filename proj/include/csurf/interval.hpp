#pragma once

#include "csurf/rational.hpp"

namespace csurf {

// Closed rational interval [lo, hi].  All operations are outward-exact:
// the result interval contains every possible value, with no rounding.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rat& exact) : lo(exact), hi(exact) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        CSURF_REQUIRE(lo <= hi, "interval endpoints out of order");
    }

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    Rat mag() const { return std::max(rat_abs(lo), rat_abs(hi)); }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sign_of(lo) <= 0 && sign_of(hi) >= 0; }

    // +1 / -1 when the sign is certain, 0 when the interval straddles zero.
    int certified_sign() const {
        if (sign_of(lo) > 0) return 1;
        if (sign_of(hi) < 0) return -1;
        return 0;
    }

    RatInterval operator-() const { return RatInterval(-hi, -lo); }

    RatInterval& operator+=(const RatInterval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }
    RatInterval& operator-=(const RatInterval& o) { return *this += -o; }

    friend RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
    friend RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }

    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
        return RatInterval(lo, hi);
    }

    // Reciprocal; requires a certified sign.
    RatInterval recip() const {
        CSURF_REQUIRE(certified_sign() != 0, "interval reciprocal through zero");
        return RatInterval(1 / hi, 1 / lo);
    }

    friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
        return a * b.recip();
    }

    friend RatInterval operator*(const Rat& c, const RatInterval& a) {
        return RatInterval(c) * a;
    }

    RatInterval hull(const RatInterval& o) const {
        return RatInterval(std::min(lo, o.lo), std::max(hi, o.hi));
    }

    // Rounds endpoints outward to multiples of 2^-bits so denominators stay small.
    RatInterval coarsen(unsigned bits) const {
        Int scale = pow_int(Int(2), bits);
        Rat s(scale);
        return RatInterval(make_rat(rat_floor(lo * s), scale), make_rat(rat_ceil(hi * s), scale));
    }
};

// Enclosure of sqrt(q), q >= 0, with width <= 2^-bits.
RatInterval sqrt_enclosure(const Rat& q, unsigned bits);

inline RatInterval sqrt3_enclosure(unsigned bits) { return sqrt_enclosure(Rat(3), bits); }

// Rectangular complex interval.
struct CInterval {
    RatInterval re, im;

    CInterval() = default;
    CInterval(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
    explicit CInterval(const Rat& exact) : re(RatInterval(exact)), im(RatInterval(Rat(0))) {}

    CInterval conj() const { return CInterval(re, -im); }
    RatInterval abs2() const { return re * re + im * im; }

    friend CInterval operator+(const CInterval& a, const CInterval& b) {
        return CInterval(a.re + b.re, a.im + b.im);
    }
    friend CInterval operator-(const CInterval& a, const CInterval& b) {
        return CInterval(a.re - b.re, a.im - b.im);
    }
    friend CInterval operator*(const CInterval& a, const CInterval& b) {
        return CInterval(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    CInterval recip() const {
        RatInterval n = abs2();
        CSURF_REQUIRE(n.certified_sign() > 0, "complex interval reciprocal through zero");
        RatInterval inv = n.recip();
        return CInterval(re * inv, -im * inv);
    }
    friend CInterval operator/(const CInterval& a, const CInterval& b) {
        return a * b.recip();
    }
    CInterval operator-() const { return CInterval(-re, -im); }
};

// "m.dddd (err <= e)" rendering of an interval at the given digit count.
std::string interval_decimal(const RatInterval& iv, int digits);

// One-significant-digit upper bound like "3e-25" for a nonnegative rational.
std::string rat_upper_bound_str(const Rat& v);

}  // namespace csurf
