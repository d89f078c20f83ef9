#include "csurf/cyclo.hpp"

#include <cctype>

namespace csurf {

const std::array<QOmega, 6>& eisenstein_units() {
    static const std::array<QOmega, 6> units = {
        QOmega(1),           QOmega(-1),           QOmega::omega(),
        -QOmega::omega(),    QOmega::omega_bar(),  -QOmega::omega_bar(),
    };
    return units;
}

bool is_canonical_rep(const QOmega& z) {
    CSURF_REQUIRE(!z.is_zero(), "canonical representative of zero");
    // For z = a + b*w: Im z has the sign of b, and Im(-w z) has the sign of
    // b - a.  arg(z) in [0, pi/3) is b >= 0 together with b < a.
    return sign_of(z.y) >= 0 && z.y < z.x;
}

std::string cyclo_str(const QOmega& z) {
    if (sign_of(z.y) == 0) return rat_str(z.x);
    std::string om = rat_str(z.y) + "*w";
    if (sign_of(z.x) == 0) return om;
    if (sign_of(z.y) > 0) return rat_str(z.x) + "+" + om;
    return rat_str(z.x) + om;  // negative sign carried by the coefficient
}

std::optional<QOmega> parse_qomega(std::string_view text) {
    // split into at most two signed terms; a term containing "*w" or ending
    // in "w" is the omega part
    size_t i = 0, n = text.size();
    Rat re(0), om(0);
    bool seen_re = false, seen_om = false;
    while (i < n) {
        while (i < n && std::isspace((unsigned char)text[i])) ++i;
        if (i >= n) break;
        size_t start = i;
        if (text[i] == '+' || text[i] == '-') ++i;
        while (i < n && text[i] != '+' && text[i] != '-') ++i;
        std::string_view term = text.substr(start, i - start);
        // trim
        while (!term.empty() && std::isspace((unsigned char)term.back())) term.remove_suffix(1);
        if (term.empty()) return std::nullopt;
        bool is_om = false;
        if (term.size() >= 1 && (term.back() == 'w' || term.back() == 'W')) {
            is_om = true;
            term.remove_suffix(1);
            while (!term.empty() && std::isspace((unsigned char)term.back())) term.remove_suffix(1);
            if (!term.empty() && term.back() == '*') term.remove_suffix(1);
        }
        Rat val(1);
        bool bare_sign = false;
        if (term.empty() || term == "+" || term == "-") {
            if (!is_om) return std::nullopt;
            bare_sign = (term == "-");
            val = bare_sign ? Rat(-1) : Rat(1);
        } else {
            auto parsed = parse_rat(term);
            if (!parsed) return std::nullopt;
            val = *parsed;
        }
        if (is_om) {
            if (seen_om) return std::nullopt;
            om = val;
            seen_om = true;
        } else {
            if (seen_re) return std::nullopt;
            re = val;
            seen_re = true;
        }
    }
    if (!seen_re && !seen_om) return std::nullopt;
    return QOmega(re, om);
}

}  // namespace csurf
