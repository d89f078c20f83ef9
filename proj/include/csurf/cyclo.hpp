#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "csurf/rational.hpp"

namespace csurf {

// Element x + y*omega of F(omega), omega a primitive cube root of unity
// (omega^2 = -1 - omega).  F is an exact field constructible from int.
// Conjugation is the basis map (x, y) -> (x - y, -y).
template <class F>
struct Cyclo {
    F x, y;

    Cyclo() : x(0), y(0) {}
    Cyclo(int v) : x(v), y(0) {}  // NOLINT: implicit for generic code
    explicit Cyclo(F re) : x(std::move(re)), y(0) {}
    Cyclo(F re, F om) : x(std::move(re)), y(std::move(om)) {}

    static Cyclo omega() { return Cyclo(F(0), F(1)); }
    static Cyclo omega_bar() { return Cyclo(F(-1), F(-1)); }
    static Cyclo theta() { return Cyclo(F(1), F(2)); }  // theta = 1 + 2w, theta^2 = -3

    bool is_zero() const { return x == F(0) && y == F(0); }
    bool is_real() const { return y == F(0); }

    Cyclo conj() const { return Cyclo(x - y, F(0) - y); }
    // z * conj(z) = x^2 - xy + y^2, a value of F
    F norm() const { return x * x - x * y + y * y; }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) { return Cyclo(a.x + b.x, a.y + b.y); }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return Cyclo(a.x - b.x, a.y - b.y); }
    Cyclo operator-() const { return Cyclo(F(0) - x, F(0) - y); }

    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        // (a.x + a.y w)(b.x + b.y w), w^2 = -1 - w
        F ac = a.x * b.x, bd = a.y * b.y;
        F cross = a.x * b.y + a.y * b.x;
        return Cyclo(ac - bd, cross - bd);
    }

    Cyclo inverse() const {
        F n = norm();
        CSURF_REQUIRE(!(n == F(0)), "division by zero in F(omega)");
        F inv = F(1) / n;
        Cyclo c = conj();
        return Cyclo(c.x * inv, c.y * inv);
    }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.x == b.x && a.y == b.y; }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
};

using QOmega = Cyclo<Rat>;

inline bool is_integral(const QOmega& z) { return is_integer(z.x) && is_integer(z.y); }

// The six units of Z[omega] in a fixed order: 1, -1, w, -w, w^2, -w^2.
const std::array<QOmega, 6>& eisenstein_units();

// True when arg(z) lies in [0, pi/3), i.e. z is the canonical representative
// of its unit orbit; z must be nonzero.
bool is_canonical_rep(const QOmega& z);

// Serialization "a" | "a+b*w" | "b*w" with rational a, b such as "-1/2".
std::string cyclo_str(const QOmega& z);
std::optional<QOmega> parse_qomega(std::string_view text);

}  // namespace csurf
