#pragma once

#include <array>
#include <vector>

#include "csurf/cyclo.hpp"
#include "csurf/matrix.hpp"

namespace csurf::eis {

// Signature tag of the hermitian form carried by a 5-vector.
//   Sig41: h0 (z,w)  = -z0 conj(w0) + sum_{i>=1} z_i conj(w_i)
//   Sig14: h0*(z,w) = +z0 conj(w0) - sum_{i>=1} z_i conj(w_i)
enum class Sig { Sig41, Sig14 };

struct EisVector {
    std::array<QOmega, 5> v{};
    Sig tag = Sig::Sig14;

    EisVector() = default;
    EisVector(std::array<QOmega, 5> coords, Sig t) : v(std::move(coords)), tag(t) {}

    friend bool operator==(const EisVector& a, const EisVector& b) {
        return a.tag == b.tag && a.v == b.v;
    }
    friend EisVector operator+(const EisVector& a, const EisVector& b) {
        CSURF_REQUIRE(a.tag == b.tag, "signature mismatch");
        EisVector r = a;
        for (int i = 0; i < 5; ++i) r.v[i] += b.v[i];
        return r;
    }
    friend EisVector operator*(const QOmega& s, const EisVector& a) {
        EisVector r = a;
        for (int i = 0; i < 5; ++i) r.v[i] = s * a.v[i];
        return r;
    }
    bool is_zero() const {
        for (const auto& z : v)
            if (!z.is_zero()) return false;
        return true;
    }
};

bool is_integral(const EisVector& v);

// max of |numerator| and |denominator| magnitudes across all coordinates
Int height(const EisVector& v);

// Sesquilinear form of the common signature tag; linear in x, conjugate
// linear in y.  Tags must agree.
QOmega hermitian_form(const EisVector& x, const EisVector& y);
QOmega herm_norm(const EisVector& x);  // hermitian_form(x, x); real value

// Lexicographic total order used for deterministic set output.
bool vector_less(const EisVector& a, const EisVector& b);

// Canonical representative of the unit orbit {u*v : u unit}: the unique
// multiple whose first nonzero coordinate has arg in [0, pi/3).
EisVector canonical_unit_rep(const EisVector& v);

// E-linear self-map of E^5, as a matrix acting on column vectors.
struct LatticeMap {
    Mat<QOmega> m;  // 5x5
    Sig tag = Sig::Sig14;

    LatticeMap() : m(Mat<QOmega>::identity(5)) {}
    LatticeMap(Mat<QOmega> mat, Sig t) : m(std::move(mat)), tag(t) {
        CSURF_REQUIRE(m.rows == 5 && m.cols == 5, "lattice map must be 5x5");
    }
    static LatticeMap identity(Sig t) { return LatticeMap(Mat<QOmega>::identity(5), t); }
    static LatticeMap scalar(const QOmega& s, Sig t) {
        Mat<QOmega> m(5, 5);
        for (int i = 0; i < 5; ++i) m(i, i) = s;
        return LatticeMap(std::move(m), t);
    }

    EisVector apply(const EisVector& x) const;
    LatticeMap compose(const LatticeMap& inner) const;  // this after inner
    LatticeMap power(unsigned k) const;

    bool is_integral() const;
    bool preserves_form() const;  // exact check on the standard basis
    friend bool operator==(const LatticeMap& a, const LatticeMap& b) {
        return a.tag == b.tag && a.m == b.m;
    }
};

// Order-6 complex reflection fixing v^perp, R(x) = x + (1 - mu) h0*(x,v) v.
// Requires h0*(v,v) = -1 exactly and mu of multiplicative order 6.
LatticeMap hexaflection(const EisVector& v, const QOmega& mu = -QOmega::omega_bar());

// All lattice vectors reachable from start by generator words while the
// coordinate height stays <= bound; deterministic ascending order.
std::vector<EisVector> orbit_bfs(const EisVector& start,
                                 const std::vector<LatticeMap>& generators,
                                 const Int& height_bound);

}  // namespace csurf::eis
