#pragma once

#include <vector>

#include "csurf/interval.hpp"
#include "csurf/rational.hpp"

namespace csurf {

// Dense univariate polynomial over Q, coefficients ascending.
struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static QPoly constant(const Rat& v) { return QPoly(std::vector<Rat>{v}); }
    static QPoly from_int_coeffs(const std::vector<Int>& z) {
        std::vector<Rat> r(z.size());
        for (size_t i = 0; i < z.size(); ++i) r[i] = Rat(z[i]);
        return QPoly(std::move(r));
    }

    void trim() {
        while (!c.empty() && sign_of(c.back()) == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    const Rat& lead() const { return c.back(); }
    Rat coeff(size_t i) const { return i < c.size() ? c[i] : Rat(0); }

    QPoly derivative() const;
    QPoly monic() const;
    Rat eval(const Rat& x) const;
    RatInterval eval(const RatInterval& x) const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rat& s, const QPoly& a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
};

// Division with remainder over Q; divisor must be nonzero.
struct QPolyDivRem {
    QPoly quot, rem;
};
QPolyDivRem divrem(const QPoly& a, const QPoly& b);
QPoly poly_mod(const QPoly& a, const QPoly& b);
QPoly poly_gcd(QPoly a, QPoly b);  // monic gcd

// Resultant of a and b over Q (Sylvester determinant, exact).
Rat resultant(const QPoly& a, const QPoly& b);

// Discriminant of a monic integer polynomial: (-1)^{n(n-1)/2} Res(f, f').
Int disc_monic_int(const std::vector<Int>& coeffs);

// Complete irreducibility decision over Q for monic integer polynomials of
// degree <= 5 (linear + quadratic factor exclusion); for larger degrees a
// mod-p certificate is attempted and failure to certify throws.
bool is_irreducible_monic(const std::vector<Int>& coeffs);

// Sturm chain of a squarefree polynomial.
struct SturmChain {
    std::vector<QPoly> seq;

    explicit SturmChain(const QPoly& f);
    int variations(const Rat& x) const;
    // number of roots in (a, b]
    int count_roots(const Rat& a, const Rat& b) const;
    int count_all_real_roots() const;
};

// Cauchy root bound: all roots lie in (-M, M).
Rat cauchy_bound(const QPoly& f);

// Isolating intervals for all real roots of a squarefree polynomial,
// ascending.  Each interval either is a point [r, r] with f(r) = 0, or has
// endpoints of opposite nonzero sign and contains exactly one root.
std::vector<RatInterval> isolate_real_roots(const QPoly& f);

// Bisect an isolating interval until width <= target (no-op on point
// intervals).  max_steps guards runaway refinement.
void refine_root(const QPoly& f, RatInterval& iv, const Rat& target_width,
                 int max_steps = 100000);

}  // namespace csurf
