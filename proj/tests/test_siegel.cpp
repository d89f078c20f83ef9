#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csurf/siegel.hpp"

using namespace csurf;
using namespace csurf::siegel;

namespace {

QOmega q(int a, int b) { return QOmega(Rat(a), Rat(b)); }

std::array<QOmega, 4> b_zero() { return {q(0, 0), q(0, 0), q(0, 0), q(0, 0)}; }

std::array<QOmega, 4> b_half() {
    return {QOmega(make_rat(1, 2), Rat(0)), q(0, 0), q(0, 0), q(0, 0)};
}

std::mt19937 rng(424242);

// random exact b with |b| <= 99/100, optionally complex
std::array<QOmega, 4> random_b(bool complex_entries) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(10, 40);
    while (true) {
        std::array<QOmega, 4> b;
        for (auto& z : b) {
            Rat re = make_rat(num(rng), den(rng));
            Rat im = complex_entries ? make_rat(num(rng), den(rng)) : Rat(0);
            z = QOmega(re, im);
        }
        Rat n2 = ball_norm2(b);
        if (n2 <= make_rat(9801, 10000)) return b;
    }
}

const RatSignCtx kCtx{};

}  // namespace

TEST_CASE("period matrix template at b = 0 is (I, omega I)") {
    auto pm = period_matrix(b_zero());
    Mat<QOmega> A = pm.A(), B = pm.B();
    CHECK(A == Mat<QOmega>::identity(5));
    CHECK(B == QOmega::omega() * Mat<QOmega>::identity(5));
}

TEST_CASE("period matrix rows for b = (1/2, 0, 0, 0)") {
    auto pm = period_matrix(b_half());
    QOmega half(make_rat(1, 2), Rat(0));
    CHECK(pm.P(0, 0) == QOmega(1));
    CHECK(pm.P(0, 1) == half);
    CHECK(pm.P(0, 5) == QOmega::omega());
    CHECK(pm.P(0, 6) == QOmega::omega_bar() * half);
    CHECK(pm.P(1, 0) == half);
    CHECK(pm.P(1, 5) == QOmega::omega_bar() * half);
    CHECK(pm.P(1, 6) == QOmega::omega());
}

TEST_CASE("column twist rule: column j+5 is the sigma twist of column j") {
    auto b = random_b(true);
    auto pm = period_matrix(b);
    for (int j = 0; j < 5; ++j) {
        CHECK(pm.P(0, j + 5) == QOmega::omega() * pm.P(0, j));
        for (int i = 1; i < 5; ++i) CHECK(pm.P(i, j + 5) == QOmega::omega_bar() * pm.P(i, j));
    }
}

TEST_CASE("Z(0) = omega I exactly, both paths") {
    auto closed = siegel_point_closed(b_zero());
    auto solved = siegel_point_solve(period_matrix(b_zero()));
    Mat<QOmega> expect = QOmega::omega() * Mat<QOmega>::identity(5);
    CHECK(closed.Z == expect);
    CHECK(solved.Z == expect);
}

TEST_CASE("Z at b = (1/2,0,0,0) matches the worked-out closed form") {
    auto sp = siegel_point_closed(b_half());
    // delta = 3/4, Z = omega I + (4 theta / 3) M with M00 = 1/4, M01 = -1/2,
    // M11 = 1/4
    QOmega th = QOmega::theta();
    QOmega f = QOmega(make_rat(4, 3), Rat(0)) * th;
    QOmega quarter(make_rat(1, 4), Rat(0));
    QOmega mhalf(make_rat(-1, 2), Rat(0));
    CHECK(sp.Z(0, 0) == QOmega::omega() + f * quarter);
    CHECK(sp.Z(0, 1) == f * mhalf);
    CHECK(sp.Z(1, 0) == f * mhalf);
    CHECK(sp.Z(1, 1) == QOmega::omega() + f * quarter);
    CHECK(sp.Z(2, 2) == QOmega::omega());
    CHECK(sp.Z(0, 2) == QOmega(0));
    // and equals the exact linear-solve path
    auto solved = siegel_point_solve(period_matrix(b_half()));
    CHECK(sp.Z == solved.Z);
}

TEST_CASE("ZFORMULA diagonal quantities") {
    auto b = random_b(false);
    auto sp = siegel_point_closed(b);
    QOmega delta = delta_of(b);
    QOmega sum2;
    for (const auto& z : b) sum2 += z * z;
    // delta0' = omega - conj(omega) (b.b), delta_i' = omega delta - theta b_i^2
    CHECK(sp.Z(0, 0) * delta == QOmega::omega() - QOmega::omega_bar() * sum2);
    for (int i = 1; i < 5; ++i)
        CHECK(sp.Z(i, i) * delta == QOmega::omega() * delta - QOmega::theta() * b[i - 1] * b[i - 1]);
}

TEST_CASE("dual-path agreement, symmetry, Im Z > 0, isotropy: 1000 random b") {
    int real_count = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        bool complex_entries = trial % 2 == 1;
        real_count += !complex_entries;
        auto b = random_b(complex_entries);
        auto pm = period_matrix(b);
        auto closed = siegel_point_closed(b);
        auto solved = siegel_point_solve(pm);
        CHECK(closed.Z == solved.Z);
        CHECK(closed.Z == closed.Z.transpose());
        CHECK(im_positive_definite(closed, kCtx));
        Mat<QOmega> iso = pm.P * J_cyclo<Rat>(5) * pm.P.transpose();
        CHECK(iso.is_zero());
    }
    CHECK(real_count == 500);
}

TEST_CASE("outside-ball and determinant-vanishes errors") {
    std::array<QOmega, 4> unit = {q(1, 0), q(0, 0), q(0, 0), q(0, 0)};
    CHECK_THROWS_WITH_AS(require_in_ball(unit, kCtx), "outside-ball", DomainError);
    // delta = 0 is unreachable inside the ball; bad input reaches the guard
    CHECK_THROWS_AS((void)siegel_point_closed(unit), DomainError);
}

TEST_CASE("riemann report for (I, omega I) and for random b") {
    auto rep0 = riemann_check(period_matrix(b_zero()), kCtx);
    CHECK(rep0.isotropy);
    CHECK(rep0.positivity);
    for (int trial = 0; trial < 100; ++trial) {
        auto rep = riemann_check(period_matrix(random_b(true)), kCtx);
        CHECK(rep.isotropy);
        CHECK(rep.positivity);
    }
}

TEST_CASE("breaking the template breaks isotropy") {
    auto pm = period_matrix(b_half());
    // replace the omega on row 0 of the B block with conj(omega)
    pm.P(0, 5) = QOmega::omega_bar();
    auto rep = riemann_check(pm, kCtx);
    CHECK(!rep.isotropy);
}

TEST_CASE("extract_b round trips and rejects off-template input") {
    for (int trial = 0; trial < 50; ++trial) {
        auto b = random_b(trial % 2 == 0);
        auto sp = siegel_point_closed(b);
        auto back = extract_b(sp);
        CHECK(back == b);
    }
    CHECK(extract_b(siegel_point_closed(b_zero())) == b_zero());
    // symmetry violation
    auto sp = siegel_point_closed(b_half());
    sp.Z(0, 1) += QOmega(1);
    CHECK_THROWS_WITH_AS((void)extract_b(sp), "not-sigma-normalized: Z not symmetric",
                         DomainError);
    // symmetric but off template
    auto sp2 = siegel_point_closed(b_half());
    sp2.Z(2, 3) += QOmega(1);
    sp2.Z(3, 2) += QOmega(1);
    CHECK_THROWS_AS((void)extract_b(sp2), DomainError);
}

TEST_CASE("symplectic lift of the identity and of scalar omega") {
    auto id = eis::LatticeMap::identity(eis::Sig::Sig14);
    CHECK(symplectic_lift(id) == Mat<Int>::identity(10));
    Mat<Int> W = omega_mult_matrix();
    Mat<Int> I10 = Mat<Int>::identity(10);
    CHECK((W * W + W + I10).is_zero());
    // the lift respects J
    Mat<Int> J = standard_J(5);
    CHECK(W.transpose() * J * W == J);
}

TEST_CASE("symplectic lift of a hexaflection") {
    eis::EisVector v;
    v.tag = eis::Sig::Sig14;
    v.v[1] = QOmega(1);
    auto r = eis::hexaflection(v);
    Mat<Int> L = symplectic_lift(r);
    Mat<Int> J = standard_J(5);
    CHECK(L.transpose() * J * L == J);
    CHECK(L * omega_mult_matrix() == omega_mult_matrix() * L);
}

TEST_CASE("symplectic lift is a homomorphism") {
    eis::EisVector v1, v2;
    v1.tag = v2.tag = eis::Sig::Sig14;
    v1.v[1] = QOmega(1);
    v2.v[0] = QOmega::theta();
    for (int i = 1; i < 5; ++i) v2.v[i] = QOmega(1);
    REQUIRE(eis::herm_norm(v2) == QOmega(-1));
    auto r1 = eis::hexaflection(v1);
    auto r2 = eis::hexaflection(v2, -QOmega::omega());
    CHECK(symplectic_lift(r1.compose(r2)) == symplectic_lift(r1) * symplectic_lift(r2));
    CHECK(symplectic_lift(r2.compose(r1)) == symplectic_lift(r2) * symplectic_lift(r1));
}

TEST_CASE("rationality over Q(omega) with verified witness") {
    auto r0 = qomega_rationality(b_zero());
    CHECK(r0.rational);
    CHECK(r0.witness_verified);
    CHECK(r0.witness == Mat<QOmega>::identity(5));

    // Fermat: b = (1,1,1,1)/(2 - conj(omega))
    QOmega fermat0 = QOmega(2) - QOmega::omega_bar();
    std::array<QOmega, 4> fb;
    for (auto& z : fb) z = QOmega(1) / fermat0;
    auto rf = qomega_rationality(fb);
    CHECK(rf.rational);
    CHECK(rf.witness_verified);

    for (int trial = 0; trial < 200; ++trial) {
        auto rr = qomega_rationality(random_b(trial % 2 == 0));
        CHECK(rr.rational);
        CHECK(rr.witness_verified);
    }
}
