#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csurf/eisenstein.hpp"

using namespace csurf;
using namespace csurf::eis;

namespace {

QOmega q(int a, int b) { return QOmega(Rat(a), Rat(b)); }

EisVector vec14(std::array<QOmega, 5> v) { return EisVector(std::move(v), Sig::Sig14); }

EisVector basis14(int i) {
    EisVector e;
    e.tag = Sig::Sig14;
    e.v[i] = QOmega(1);
    return e;
}

std::mt19937 rng(20240811);

QOmega random_scalar(int span = 6) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 4);
    return QOmega(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
}

EisVector random_vector(Sig tag) {
    EisVector v;
    v.tag = tag;
    for (int i = 0; i < 5; ++i) v.v[i] = random_scalar();
    return v;
}

EisVector random_integral_vector(Sig tag, int span = 4) {
    std::uniform_int_distribution<int> num(-span, span);
    EisVector v;
    v.tag = tag;
    for (int i = 0; i < 5; ++i) v.v[i] = q(num(rng), num(rng));
    return v;
}

}  // namespace

TEST_CASE("scalar arithmetic: omega and theta identities") {
    QOmega w = QOmega::omega();
    CHECK(w * w * w == QOmega(1));
    CHECK(w * w == QOmega::omega_bar());
    CHECK(w * w + w + QOmega(1) == QOmega(0));
    QOmega th = QOmega::theta();
    CHECK(th * th == QOmega(-3));
    CHECK(th == QOmega(1) + q(0, 2));
    // conjugation: (a, b) -> (a - b, -b), and norm = z * conj(z)
    QOmega z = q(3, 5);
    CHECK(z.conj() == q(-2, -5));
    CHECK(z * z.conj() == QOmega(Rat(z.norm()), Rat(0)));
    CHECK(z.norm() == Rat(9 - 15 + 25));
}

TEST_CASE("six units, inverses, canonical representatives") {
    const auto& units = eisenstein_units();
    for (const auto& u : units) {
        CHECK(u.norm() == 1);
        CHECK(is_integral(u));
    }
    // exactly one unit multiple of any nonzero scalar is canonical
    for (int trial = 0; trial < 50; ++trial) {
        QOmega z = random_scalar();
        if (z.is_zero()) continue;
        int canonical = 0;
        for (const auto& u : units) canonical += is_canonical_rep(u * z);
        CHECK(canonical == 1);
    }
    CHECK(is_canonical_rep(QOmega(1)));
    CHECK(!is_canonical_rep(QOmega::omega()));
    CHECK(!is_canonical_rep(q(1, 1)));  // arg exactly pi/3
    CHECK(is_canonical_rep(q(2, 1)));   // arg pi/6
}

TEST_CASE("hermitian form values from the definition") {
    CHECK(herm_norm(basis14(0)) == QOmega(1));
    CHECK(herm_norm(basis14(1)) == QOmega(-1));
    // Fermat vector (2 - conj(omega), 1, 1, 1, 1): norm 7 - 4 = 3
    EisVector fermat = vec14({q(3, 1), q(1, 0), q(1, 0), q(1, 0), q(1, 0)});
    CHECK(q(3, 1) == QOmega(2) - QOmega::omega_bar());
    CHECK(herm_norm(fermat) == QOmega(3));
    // Clebsch vector (3,1,1,1,1): 9 - 4 = 5
    EisVector clebsch = vec14({q(3, 0), q(1, 0), q(1, 0), q(1, 0), q(1, 0)});
    CHECK(herm_norm(clebsch) == QOmega(5));
    // signature (4,1) side flips the sign
    EisVector e0_41 = vec14({q(1, 0), q(0, 0), q(0, 0), q(0, 0), q(0, 0)});
    e0_41.tag = Sig::Sig41;
    CHECK(herm_norm(e0_41) == QOmega(-1));
}

TEST_CASE("hermitian symmetry h(x,y) = conj(h(y,x)) on 1000 random pairs") {
    for (int trial = 0; trial < 1000; ++trial) {
        EisVector x = random_vector(Sig::Sig14);
        EisVector y = random_vector(Sig::Sig14);
        CHECK(hermitian_form(x, y) == hermitian_form(y, x).conj());
    }
}

TEST_CASE("norms are real (equal to their own conjugate)") {
    for (int trial = 0; trial < 200; ++trial) {
        QOmega n = herm_norm(random_vector(Sig::Sig14));
        CHECK(n == n.conj());
        CHECK(n.is_real());
    }
}

TEST_CASE("mismatched signature tags are a contract violation") {
    EisVector a = basis14(0);
    EisVector b = basis14(0);
    b.tag = Sig::Sig41;
    CHECK_THROWS_AS((void)hermitian_form(a, b), ContractError);
}

TEST_CASE("hexaflection fixes the mirror and scales the normal") {
    EisVector v = basis14(1);
    LatticeMap r = hexaflection(v);
    // x orthogonal to v is fixed
    CHECK(r.apply(basis14(2)) == basis14(2));
    CHECK(r.apply(basis14(0)) == basis14(0));
    // R(v) = mu v with the default unit mu = -conj(omega)
    CHECK(r.apply(v) == (-QOmega::omega_bar()) * v);
}

TEST_CASE("hexaflection orders: R^6 = I, R^2 != I, R^3 != I, exact powers") {
    EisVector v = basis14(1);
    for (const QOmega& mu : {-QOmega::omega(), -QOmega::omega_bar()}) {
        LatticeMap r = hexaflection(v, mu);
        LatticeMap id = LatticeMap::identity(Sig::Sig14);
        CHECK(r.power(6) == id);
        CHECK(!(r.power(2) == id));
        CHECK(!(r.power(3) == id));
    }
}

TEST_CASE("hexaflection contract violations") {
    CHECK_THROWS_AS((void)hexaflection(basis14(0)), ContractError);  // norm +1
    CHECK_THROWS_AS((void)hexaflection(basis14(1), QOmega::omega()), ContractError);  // order 3
    CHECK_THROWS_AS((void)hexaflection(basis14(1), QOmega(-1)), ContractError);       // order 2
}

TEST_CASE("hexaflections preserve the form and the lattice") {
    // (theta, 1, 1, 1, 1) has norm 3 - 4 = -1
    EisVector w = vec14({QOmega::theta(), q(1, 0), q(1, 0), q(1, 0), q(1, 0)});
    REQUIRE(herm_norm(w) == QOmega(-1));
    for (const QOmega& mu : {-QOmega::omega(), -QOmega::omega_bar()}) {
        LatticeMap r = hexaflection(w, mu);
        CHECK(r.is_integral());
        CHECK(r.preserves_form());
        CHECK(r.power(6) == LatticeMap::identity(Sig::Sig14));
        for (int trial = 0; trial < 100; ++trial) {
            EisVector x = random_vector(Sig::Sig14);
            EisVector y = random_vector(Sig::Sig14);
            CHECK(hermitian_form(r.apply(x), r.apply(y)) == hermitian_form(x, y));
        }
        for (int trial = 0; trial < 50; ++trial) {
            EisVector x = random_integral_vector(Sig::Sig14);
            CHECK(is_integral(r.apply(x)));
        }
    }
}

TEST_CASE("orbit of a point with no generators is itself") {
    EisVector start = basis14(0);
    auto orbit = orbit_bfs(start, {}, Int(10));
    REQUIRE(orbit.size() == 1);
    CHECK(orbit[0] == start);
}

TEST_CASE("coordinate hexaflections fix the Cayley point up to units") {
    EisVector start = basis14(0);
    std::vector<LatticeMap> gens;
    for (int i = 1; i < 5; ++i) gens.push_back(hexaflection(basis14(i)));
    auto orbit = orbit_bfs(start, gens, Int(10));
    // e0 is orthogonal to every generator mirror, so the orbit is a point
    REQUIRE(orbit.size() == 1);
    CHECK(orbit[0] == start);
}

TEST_CASE("orbit through mixed mirrors reaches new norm-1 vectors") {
    EisVector start = basis14(0);
    EisVector w = vec14({QOmega::theta(), q(1, 0), q(1, 0), q(1, 0), q(1, 0)});
    std::vector<LatticeMap> gens = {hexaflection(w), hexaflection(basis14(1))};
    auto orbit = orbit_bfs(start, gens, Int(10));
    CHECK(orbit.size() > 1);
    bool found_nonproportional = false;
    for (const auto& x : orbit) {
        CHECK(herm_norm(x) == QOmega(1));  // isometries preserve the norm
        bool proportional = x.v[1].is_zero() && x.v[2].is_zero() && x.v[3].is_zero() &&
                            x.v[4].is_zero();
        if (!proportional) found_nonproportional = true;
    }
    CHECK(found_nonproportional);
}

TEST_CASE("orbit determinism") {
    EisVector start = basis14(0);
    EisVector w = vec14({QOmega::theta(), q(1, 0), q(1, 0), q(1, 0), q(1, 0)});
    std::vector<LatticeMap> gens = {hexaflection(w), hexaflection(basis14(2))};
    auto a = orbit_bfs(start, gens, Int(8));
    auto b = orbit_bfs(start, gens, Int(8));
    CHECK(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("height measure") {
    EisVector v = vec14({q(1, 0), QOmega(make_rat(3, 7), Rat(0)), q(0, 0), q(0, 0), q(0, 0)});
    CHECK(height(v) == 7);
    CHECK(height(basis14(0)) == 1);
}
