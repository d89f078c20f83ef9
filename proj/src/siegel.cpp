#include "csurf/siegel.hpp"

namespace csurf::siegel {

namespace {

// Writes scalar*basis_slot into the two integer rows of the Z-basis
// expansion.  Slot 0 pairs (g0, conj(omega) g0), slots 1..4 pair (gi, omega gi).
void expand_scalar(int slot, const QOmega& s, int col, Mat<Int>& out) {
    CSURF_REQUIRE(is_integral(s), "lattice map must be integral");
    Int a = rat_num(s.x), b = rat_num(s.y);
    if (slot == 0) {
        // a + b w = (a - b) - b conj(w)
        out(0, col) += a - b;
        out(5, col) += -b;
    } else {
        out(slot, col) += a;
        out(5 + slot, col) += b;
    }
}

}  // namespace

Mat<Int> symplectic_lift(const eis::LatticeMap& g) {
    CSURF_REQUIRE(g.is_integral(), "symplectic lift requires an integral map");
    CSURF_REQUIRE(g.preserves_form(), "symplectic lift requires an isometry");
    Mat<Int> L(10, 10);
    QOmega om = QOmega::omega(), omb = QOmega::omega_bar();
    for (int j = 0; j < 10; ++j) {
        // unit attached to the source basis vector
        int base = j % 5;
        QOmega unit = (j < 5) ? QOmega(1) : (base == 0 ? omb : om);
        for (int i = 0; i < 5; ++i) {
            QOmega entry = unit * g.m(i, base);
            if (!entry.is_zero()) expand_scalar(i, entry, j, L);
        }
    }
    return L;
}

Mat<Int> omega_mult_matrix() {
    return symplectic_lift(eis::LatticeMap::scalar(QOmega::omega(), eis::Sig::Sig14));
}

QOmegaRationality qomega_rationality(const std::array<QOmega, 4>& b) {
    QOmegaRationality r;
    r.rational = true;
    PeriodMatrix pm = period_matrix(b);
    Mat<QOmega> A = pm.A();
    Mat<QOmega> Ainv;
    CSURF_REQUIRE(solve_field(A, Mat<QOmega>::identity(5), Ainv), "A(b) is singular");
    r.witness = Ainv;
    // Exact span check: the 10 columns of Ainv * P, written over the Q-basis
    // {1, w} of each entry, must span Q^10.
    Mat<QOmega> T = Ainv * pm.P;
    Mat<Rat> span(10, 10);
    for (int j = 0; j < 10; ++j)
        for (int i = 0; i < 5; ++i) {
            span(2 * i, j) = T(i, j).x;
            span(2 * i + 1, j) = T(i, j).y;
        }
    r.witness_verified = sign_of(det_field(span)) != 0;
    return r;
}

}  // namespace csurf::siegel
