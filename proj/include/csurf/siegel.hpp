#pragma once

#include <array>
#include <optional>

#include "csurf/arrangement.hpp"
#include "csurf/eisenstein.hpp"

namespace csurf::siegel {

// 5x10 period matrix P = (A, B) in the template of the sigma-normalized
// frame: A has first row (1, b), unit diagonal below, first column (1, b)^T;
// B applies the eigenvalue twist (omega on row 0, conj omega on rows 1..4).
template <class F>
struct PeriodMatrixT {
    Mat<Cyclo<F>> P;  // 5 x 10

    Mat<Cyclo<F>> A() const {
        Mat<Cyclo<F>> a(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) a(i, j) = P(i, j);
        return a;
    }
    Mat<Cyclo<F>> B() const {
        Mat<Cyclo<F>> b(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) b(i, j) = P(i, j + 5);
        return b;
    }
};

template <class F>
struct SiegelPointT {
    Mat<Cyclo<F>> Z;  // 5 x 5 symmetric
};

using PeriodMatrix = PeriodMatrixT<Rat>;
using SiegelPoint = SiegelPointT<Rat>;

// |b|^2 = sum of hermitian norms, an element of F.
template <class F>
F ball_norm2(const std::array<Cyclo<F>, 4>& b) {
    F s(0);
    for (const auto& z : b) s = s + z.norm();
    return s;
}

// delta = 1 - b . b (complex bilinear dot product).
template <class F>
Cyclo<F> delta_of(const std::array<Cyclo<F>, 4>& b) {
    Cyclo<F> s;
    for (const auto& z : b) s += z * z;
    return Cyclo<F>(F(1)) - s;
}

template <class F, class Ctx>
void require_in_ball(const std::array<Cyclo<F>, 4>& b, const Ctx& ctx) {
    if (ctx.sign(F(1) - ball_norm2(b)) <= 0) throw DomainError("outside-ball");
}

template <class F>
PeriodMatrixT<F> period_matrix(const std::array<Cyclo<F>, 4>& b) {
    using C = Cyclo<F>;
    PeriodMatrixT<F> pm;
    pm.P = Mat<C>(5, 10);
    C om = C::omega(), omb = C::omega_bar();
    pm.P(0, 0) = C(F(1));
    pm.P(0, 5) = om;
    for (int j = 1; j < 5; ++j) {
        pm.P(0, j) = b[j - 1];
        pm.P(0, 5 + j) = omb * b[j - 1];
        pm.P(j, 0) = b[j - 1];
        pm.P(j, 5) = omb * b[j - 1];
        pm.P(j, j) = C(F(1));
        pm.P(j, 5 + j) = om;
    }
    return pm;
}

// Closed-form Z(b) = omega I + (theta/delta) [[b.b, -b], [-b^T, b otimes b]].
template <class F>
SiegelPointT<F> siegel_point_closed(const std::array<Cyclo<F>, 4>& b) {
    using C = Cyclo<F>;
    C delta = delta_of(b);
    if (delta.is_zero()) throw DomainError("determinant-vanishes");
    C factor = C::theta() / delta;
    C bdotb;
    for (const auto& z : b) bdotb += z * z;
    SiegelPointT<F> sp;
    sp.Z = Mat<C>(5, 5);
    for (int i = 0; i < 5; ++i) sp.Z(i, i) = C::omega();
    sp.Z(0, 0) += factor * bdotb;
    for (int i = 1; i < 5; ++i) {
        sp.Z(0, i) -= factor * b[i - 1];
        sp.Z(i, 0) -= factor * b[i - 1];
        for (int j = 1; j < 5; ++j) sp.Z(i, j) += factor * b[i - 1] * b[j - 1];
    }
    return sp;
}

// Z = A^{-1} B by exact linear solve from the period matrix template.
template <class F>
SiegelPointT<F> siegel_point_solve(const PeriodMatrixT<F>& pm) {
    SiegelPointT<F> sp;
    if (!solve_field(pm.A(), pm.B(), sp.Z)) throw DomainError("determinant-vanishes");
    return sp;
}

// The omega-coefficient matrix of Z; Im Z = (sqrt(3)/2) * this matrix, so
// positive definiteness of Im Z is decided by the F-signs of its minors.
template <class F>
Mat<F> omega_part(const Mat<Cyclo<F>>& Z) {
    Mat<F> y(Z.rows, Z.cols);
    for (int i = 0; i < Z.rows; ++i)
        for (int j = 0; j < Z.cols; ++j) y(i, j) = Z(i, j).y;
    return y;
}

template <class F, class Ctx>
bool positive_definite(const Mat<F>& sym, const Ctx& ctx) {
    CSURF_REQUIRE(sym.rows == sym.cols, "square matrix required");
    for (int k = 1; k <= sym.rows; ++k) {
        Mat<F> lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead(i, j) = sym(i, j);
        if (ctx.sign(det_field(lead)) <= 0) return false;
    }
    return true;
}

template <class F, class Ctx>
bool im_positive_definite(const SiegelPointT<F>& sp, const Ctx& ctx) {
    return positive_definite(omega_part(sp.Z), ctx);
}

// Joint inverse of the closed form: recovers b from the off-diagonal row 0
// together with delta from Z00, then verifies the whole template.
template <class F>
std::array<Cyclo<F>, 4> extract_b(const SiegelPointT<F>& sp) {
    using C = Cyclo<F>;
    const Mat<C>& Z = sp.Z;
    CSURF_REQUIRE(Z.rows == 5 && Z.cols == 5, "Siegel point must be 5x5");
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (!(Z(i, j) == Z(j, i))) throw DomainError("not-sigma-normalized", "Z not symmetric");
    // Z00 = (omega - conj(omega) t) / (1 - t) with t = sum b_i^2
    C om = C::omega(), omb = C::omega_bar();
    C den = omb - Z(0, 0);
    if (den.is_zero()) throw DomainError("not-sigma-normalized", "Z00 equals conj(omega)");
    C t = (om - Z(0, 0)) / den;
    C delta = C(F(1)) - t;
    if (delta.is_zero()) throw DomainError("not-sigma-normalized", "degenerate delta");
    // Z0i = -theta b_i / delta  =>  b_i = delta theta Z0i / 3
    C theta = C::theta();
    std::array<C, 4> b;
    C third = C(F(1)) / C(F(3));
    for (int i = 0; i < 4; ++i) b[i] = delta * theta * Z(0, i + 1) * third;
    SiegelPointT<F> check = siegel_point_closed(b);
    if (!(check.Z == Z)) throw DomainError("not-sigma-normalized", "off-template entries");
    return b;
}

struct RiemannReport {
    bool isotropy = false;    // P J P^T = 0, exact
    bool positivity = false;  // theta P J conj(P)^T positive definite, certified
    bool pass() const { return isotropy && positivity; }
};

template <class F>
Mat<Cyclo<F>> conj_entrywise(const Mat<Cyclo<F>>& m) {
    Mat<Cyclo<F>> r(m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = m.a[k].conj();
    return r;
}

template <class F>
Mat<Cyclo<F>> J_cyclo(int g) {
    Mat<Cyclo<F>> J(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        J(i, g + i) = Cyclo<F>(F(1));
        J(g + i, i) = Cyclo<F>(F(-1));
    }
    return J;
}

template <class F, class Ctx>
RiemannReport riemann_check(const PeriodMatrixT<F>& pm, const Ctx& ctx) {
    using C = Cyclo<F>;
    RiemannReport rep;
    Mat<C> J = J_cyclo<F>(5);
    Mat<C> iso = pm.P * J * pm.P.transpose();
    rep.isotropy = iso.is_zero();
    // second relation: M = theta P J conj(P)^T is hermitian; positive definite
    // exactly when the frame is positively oriented
    Mat<C> M = pm.P * J * conj_entrywise(pm.P).transpose();
    for (auto& z : M.a) z = C::theta() * z;
    bool hermitian = true;
    for (int i = 0; i < 5 && hermitian; ++i)
        for (int j = 0; j < 5 && hermitian; ++j)
            if (!(M(i, j) == M(j, i).conj())) hermitian = false;
    if (!hermitian) {
        rep.positivity = false;
        return rep;
    }
    // hermitian minors are real elements of F
    bool pos = true;
    for (int k = 1; k <= 5 && pos; ++k) {
        Mat<C> lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead(i, j) = M(i, j);
        C d = det_field(lead);
        CSURF_REQUIRE(d.is_real(), "hermitian determinant must be real");
        if (ctx.sign(d.x) <= 0) pos = false;
    }
    rep.positivity = pos;
    return rep;
}

// Integral symplectic lift of a lattice isometry: the action of g on the
// Z-basis (g0..g4, g0'..g4') with g0' = conj(omega) g0, gi' = omega gi.
Mat<Int> symplectic_lift(const eis::LatticeMap& g);

// The lift of scalar multiplication by omega (satisfies W^2 + W + I = 0).
Mat<Int> omega_mult_matrix();

struct QOmegaRationality {
    bool rational = false;
    int offending_coordinate = -1;           // when not rational
    Mat<QOmega> witness;                     // 5x5 change of basis over Q(omega)
    bool witness_verified = false;           // exact span check passed
};

QOmegaRationality qomega_rationality(const std::array<QOmega, 4>& b);

// Entries of b in a larger exact field: rational over Q(omega) only if every
// coordinate pair is literally rational.
template <class F>
QOmegaRationality qomega_rationality_general(const std::array<Cyclo<F>, 4>& b) {
    for (int i = 0; i < 4; ++i) {
        if (!(is_rational_scalar(b[i].x) && is_rational_scalar(b[i].y))) {
            QOmegaRationality r;
            r.rational = false;
            r.offending_coordinate = i;
            return r;
        }
    }
    std::array<QOmega, 4> bq;
    for (int i = 0; i < 4; ++i) bq[i] = QOmega(rational_value(b[i].x), rational_value(b[i].y));
    return qomega_rationality(bq);
}

}  // namespace csurf::siegel
