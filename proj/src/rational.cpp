#include "csurf/rational.hpp"

#include <cctype>

namespace csurf {

std::string rat_str(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).get_str();
    return rat_num(q).get_str() + "/" + rat_den(q).get_str();
}

std::optional<Rat> parse_rat(std::string_view text) {
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    size_t start = i;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    size_t digits_begin = i;
    while (i < n && std::isdigit((unsigned char)text[i])) ++i;
    if (i == digits_begin) return std::nullopt;
    Int num(std::string(text.substr(start, i - start)), 10);
    Int den(1);
    skip_ws();
    if (i < n && text[i] == '/') {
        ++i;
        skip_ws();
        size_t dstart = i;
        while (i < n && std::isdigit((unsigned char)text[i])) ++i;
        if (i == dstart) return std::nullopt;
        den = Int(std::string(text.substr(dstart, i - dstart)), 10);
        if (den == 0) return std::nullopt;
    }
    skip_ws();
    if (i != n) return std::nullopt;
    return make_rat(num, den);
}

std::string decimal_string(const Rat& value, int digits) {
    if (digits < 0) digits = 0;
    Int scale = pow_int(Int(10), (unsigned)digits);
    // round(value * scale) with ties away from zero
    Rat scaled = value * Rat(scale);
    Int twice_num = 2 * rat_num(scaled);
    Int den = rat_den(scaled);
    Int rounded;
    if (sign_of(scaled) >= 0) {
        rounded = floor_div(twice_num + den, 2 * den);
    } else {
        Int c;
        mpz_cdiv_q(c.get_mpz_t(), Int(twice_num - den).get_mpz_t(), Int(2 * den).get_mpz_t());
        rounded = c;
    }
    bool neg = sign_of(rounded) < 0;
    Int mag = int_abs(rounded);
    std::string s = mag.get_str();
    std::string out = neg ? "-" : "";
    if (digits == 0) return out + s;
    if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    out += s.substr(0, s.size() - digits);
    out += ".";
    out += s.substr(s.size() - digits);
    return out;
}

}  // namespace csurf
