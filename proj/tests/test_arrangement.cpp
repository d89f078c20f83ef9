#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "csurf/arrangement.hpp"

using namespace csurf;
using namespace csurf::arr;

namespace {

QOmega q(int a, int b) { return QOmega(Rat(a), Rat(b)); }

BallPoint point(std::array<QOmega, 5> v) { return BallPoint(std::move(v)); }

BallPoint cayley() { return point({q(1, 0), q(0, 0), q(0, 0), q(0, 0), q(0, 0)}); }
BallPoint fermat() { return point({q(3, 1), q(1, 0), q(1, 0), q(1, 0), q(1, 0)}); }
BallPoint clebsch() { return point({q(3, 0), q(1, 0), q(1, 0), q(1, 0), q(1, 0)}); }

std::mt19937 rng(777);

// brute-force oracle: all integer n in the Cauchy-Schwarz box with
// n^T G n = target, for a positive definite rational Gram
std::vector<std::vector<Int>> box_oracle(const Mat<Rat>& gram, const Rat& target) {
    int n = gram.rows;
    Mat<Rat> inv = inverse_field(gram);
    std::vector<Int> hi(n);
    for (int i = 0; i < n; ++i) hi[i] = floor_sqrt(target * inv(i, i));
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(n, Int(0));
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            Rat val(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) val += Rat(cur[i]) * gram(i, j) * Rat(cur[j]);
            bool zero = std::all_of(cur.begin(), cur.end(), [](const Int& v) { return v == 0; });
            if (!zero && val == target) out.push_back(cur);
            return;
        }
        for (Int t = -hi[k]; t <= hi[k]; ++t) {
            cur[k] = t;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("ball norms of the preset points") {
    CHECK(ball_norm(cayley()) == Rat(1));
    CHECK(ball_norm(fermat()) == Rat(3));
    CHECK(ball_norm(clebsch()) == Rat(5));
}

TEST_CASE("orthogonal complement of the Cayley point") {
    auto basis = orthogonal_complement_lattice(cayley());
    REQUIRE(basis.size() == 8);  // E-rank 4 over Z
    for (const auto& w : basis) {
        CHECK(eis::is_integral(w));
        CHECK(w.v[0].is_zero());  // kernel of the v0 coefficient
    }
}

TEST_CASE("orthogonal complement of (2,1,0,0,0)") {
    BallPoint p = point({q(2, 0), q(1, 0), q(0, 0), q(0, 0), q(0, 0)});
    auto basis = orthogonal_complement_lattice(p);
    REQUIRE(basis.size() == 8);
    for (const auto& w : basis) {
        // orthogonality forces w1 = 2 w0
        CHECK(w.v[1] == QOmega(2) * w.v[0]);
        CHECK(eis::hermitian_form(w, {p.v, eis::Sig::Sig14}).is_zero());
    }
}

TEST_CASE("orthogonal complement of a non-integral exact point") {
    BallPoint p = point({q(1, 0), QOmega(make_rat(1, 3), make_rat(1, 7)), q(0, 0), q(0, 0),
                         q(0, 0)});
    REQUIRE(sign_of(ball_norm(p)) > 0);
    auto basis = orthogonal_complement_lattice(p);
    CHECK(basis.size() <= 8);
    eis::EisVector pv{p.v, eis::Sig::Sig14};
    for (const auto& w : basis) CHECK(eis::hermitian_form(w, pv).is_zero());
}

TEST_CASE("short vectors on a rank-1 lattice") {
    Mat<Rat> gram(1, 1);
    gram(0, 0) = Rat(-1);
    auto sols = short_vectors(gram, Rat(1));
    REQUIRE(sols.size() == 2);
    CHECK(sols[0][0] == -1);
    CHECK(sols[1][0] == 1);
}

TEST_CASE("short vectors with target zero is empty") {
    Mat<Rat> gram(2, 2);
    gram(0, 0) = Rat(-2);
    gram(1, 1) = Rat(-3);
    gram(0, 1) = gram(1, 0) = Rat(1);
    CHECK(short_vectors(gram, Rat(0)).empty());
}

TEST_CASE("short vectors rejects indefinite input") {
    Mat<Rat> gram(2, 2);
    gram(0, 0) = Rat(-1);
    gram(1, 1) = Rat(1);
    CHECK_THROWS_WITH_AS((void)short_vectors(gram, Rat(1)), "not-definite", DomainError);
}

TEST_CASE("complement of Cayley holds exactly 24 norm -1 vectors") {
    auto basis = orthogonal_complement_lattice(cayley());
    Mat<Rat> gram = detail::real_polar_gram(basis);
    auto sols = short_vectors(gram, Rat(1));
    CHECK(sols.size() == 24);  // 4 hyperplanes x 6 units
}

TEST_CASE("Fincke-Pohst agrees with the box oracle on random definite forms") {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> rank_d(1, 4);
    std::uniform_int_distribution<int> target_d(1, 6);
    int done = 0;
    while (done < 40) {
        int r = rank_d(rng);
        Mat<Rat> m(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) m(i, j) = Rat(entry(rng));
        // G = M^T M + I is positive definite with entries <= 10 for small M
        Mat<Rat> g = m.transpose() * m;
        for (int i = 0; i < r; ++i) g(i, i) += 1;
        bool small = true;
        for (const auto& v : g.a)
            if (rat_abs(v) > 10) small = false;
        if (!small) continue;
        Rat target(target_d(rng));
        auto fp = short_vectors_pd(g, target);
        auto oracle = box_oracle(g, target);
        CHECK(fp == oracle);
        ++done;
    }
}

TEST_CASE("classification of the Cayley point: 4 orthogonal hyperplanes") {
    auto cls = classify_point(cayley());
    CHECK(cls.k == 4);
    REQUIRE(cls.hyperplanes.size() == 4);
    // normals are the canonical representatives of e1..e4
    for (int i = 0; i < 4; ++i) {
        const auto& n = cls.hyperplanes[i].normal;
        CHECK(eis::herm_norm(n) == QOmega(-1));
        int nonzero = 0;
        for (int j = 0; j < 5; ++j) nonzero += !n.v[j].is_zero();
        CHECK(nonzero == 1);
        CHECK(n.v[0].is_zero());
    }
    // pairwise h0*-orthogonality of the arrangement through a point
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(eis::hermitian_form(cls.hyperplanes[i].normal, cls.hyperplanes[j].normal)
                      .is_zero());
}

TEST_CASE("classification of (2,1,0,0,0): 3 hyperplanes e2, e3, e4") {
    BallPoint p = point({q(2, 0), q(1, 0), q(0, 0), q(0, 0), q(0, 0)});
    auto cls = classify_point(p);
    CHECK(cls.k == 3);
    for (const auto& h : cls.hyperplanes) {
        CHECK(h.normal.v[0].is_zero());
        CHECK(h.normal.v[1].is_zero());
    }
}

TEST_CASE("Fermat and Clebsch points are smooth") {
    CHECK(classify_point(fermat()).smooth());
    CHECK(classify_point(clebsch()).smooth());
}

TEST_CASE("classification is unit invariant") {
    BallPoint p = point({q(2, 0), q(1, 0), q(0, 0), q(0, 0), q(0, 0)});
    auto base = classify_point(p);
    for (const QOmega& u : eisenstein_units()) {
        BallPoint up;
        for (int i = 0; i < 5; ++i) up.v[i] = u * p.v[i];
        auto cls = classify_point(up);
        CHECK(cls.k == base.k);
        for (int i = 0; i < cls.k; ++i) CHECK(cls.hyperplanes[i] == base.hyperplanes[i]);
    }
}

TEST_CASE("non-positive points are rejected") {
    BallPoint outside = point({q(1, 0), q(2, 0), q(0, 0), q(0, 0), q(0, 0)});
    CHECK(sign_of(ball_norm(outside)) < 0);
    CHECK_THROWS_AS((void)classify_point(outside), ContractError);
}

TEST_CASE("random exact points in the ball classify with k <= 4") {
    std::uniform_int_distribution<int> num(-2, 2);
    int done = 0;
    while (done < 25) {
        BallPoint p;
        p.v[0] = QOmega(1);
        for (int i = 1; i < 5; ++i)
            p.v[i] = QOmega(make_rat(num(rng), 5), make_rat(num(rng), 5));
        if (sign_of(ball_norm(p)) <= 0) continue;
        auto cls = classify_point(p);
        CHECK(cls.k <= 4);
        // hyperplane normals through one point are pairwise orthogonal
        for (int i = 0; i < cls.k; ++i)
            for (int j = i + 1; j < cls.k; ++j)
                CHECK(eis::hermitian_form(cls.hyperplanes[i].normal,
                                          cls.hyperplanes[j].normal)
                          .is_zero());
        ++done;
    }
}
