#include "csurf/interval.hpp"

#include <sstream>

namespace csurf {

RatInterval sqrt_enclosure(const Rat& q, unsigned bits) {
    CSURF_REQUIRE(sign_of(q) >= 0, "sqrt of negative rational");
    if (sign_of(q) == 0) return RatInterval(Rat(0));
    // floor(2^bits * sqrt(q)) via an integer square root of q scaled by 4^bits.
    Int scale = pow_int(Int(2), bits);
    Rat scaled = q * Rat(scale) * Rat(scale);
    Int lo_num = floor_sqrt(scaled);
    Rat lo = make_rat(lo_num, scale);
    Rat hi = make_rat(lo_num + 1, scale);
    // tighten when the scaled value is a perfect square
    if (lo * lo == q) hi = lo;
    return RatInterval(lo, hi);
}

std::string rat_upper_bound_str(const Rat& v) {
    CSURF_REQUIRE(sign_of(v) >= 0, "bound must be nonnegative");
    if (sign_of(v) == 0) return "0";
    int exp10 = 0;
    Rat e = v;
    while (e >= 1) {
        e /= 10;
        ++exp10;
    }
    while (e < make_rat(1, 10)) {
        e *= 10;
        --exp10;
    }
    int lead = (int)rat_ceil(e * 10).get_si();
    if (lead == 10) {
        lead = 1;
        ++exp10;
    }
    std::ostringstream os;
    os << lead << "e" << (exp10 - 1);
    return os.str();
}

std::string interval_decimal(const RatInterval& iv, int digits) {
    std::string mid = decimal_string(iv.mid(), digits);
    // error bound: half-width plus the display rounding
    Rat err = iv.width() / 2 + make_rat(Int(1), pow_int(Int(10), (unsigned)digits));
    // present the bound as a one-significant-digit power of ten
    int exp10 = 0;
    Rat e = err;
    while (e >= 1) {
        e /= 10;
        ++exp10;
    }
    while (e < make_rat(1, 10)) {
        e *= 10;
        --exp10;
    }
    int lead = (int)rat_ceil(e * 10).get_si();  // 1..10
    if (lead == 10) {
        lead = 1;
        ++exp10;
    }
    std::ostringstream os;
    os << mid << " (err<=" << lead << "e" << (exp10 - 1) << ")";
    return os.str();
}

}  // namespace csurf
