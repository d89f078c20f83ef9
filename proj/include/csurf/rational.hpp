#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace csurf {

using Int = mpz_class;
using Rat = mpq_class;

// Domain/usage errors carry a stable machine token, e.g. "outside-ball",
// "not-definite", "precision-exhausted".  The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(std::string token, const std::string& detail = "")
        : std::runtime_error(detail.empty() ? token : token + ": " + detail),
          token_(std::move(token)) {}
    const std::string& token() const { return token_; }

private:
    std::string token_;
};

// Contract violations: preconditions the caller was required to establish.
class ContractError : public std::logic_error {
    using std::logic_error::logic_error;
};

#define CSURF_REQUIRE(cond, msg)                         \
    do {                                                 \
        if (!(cond)) throw ::csurf::ContractError(msg);  \
    } while (0)

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline int sign_of(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sign_of(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

inline Int rat_num(const Rat& q) { return Int(q.get_num()); }
inline Int rat_den(const Rat& q) { return Int(q.get_den()); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(rat_num(q), rat_den(q)); }

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), rat_num(q).get_mpz_t(), rat_den(q).get_mpz_t());
    return c;
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// floor(sqrt(q)) for rational q >= 0.  Uses floor(sqrt(n/d)) = floor(isqrt(n*d)/d).
inline Int floor_sqrt(const Rat& q) {
    if (sign_of(q) < 0) throw ContractError("floor_sqrt of negative rational");
    return floor_div(isqrt_floor(rat_num(q) * rat_den(q)), rat_den(q));
}

inline Rat pow_rat(const Rat& base, unsigned e) {
    Rat r(1);
    Rat b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int pow_int(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_abs(const Rat& q) { return sign_of(q) < 0 ? Rat(-q) : q; }
inline Int int_abs(const Int& z) { return sign_of(z) < 0 ? Int(-z) : z; }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

std::string rat_str(const Rat& q);

// Parses "p", "-p", "p/q" with optional whitespace.  Returns nullopt on error.
std::optional<Rat> parse_rat(std::string_view text);

// Decimal expansion with `digits` places after the point, rounded to nearest
// (ties away from zero).
std::string decimal_string(const Rat& value, int digits);

}  // namespace csurf
