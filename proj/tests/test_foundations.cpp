#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csurf/interval.hpp"
#include "csurf/matrix.hpp"
#include "csurf/polynomial.hpp"
#include "csurf/rational.hpp"

using namespace csurf;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_str(make_rat(3, 6)) == "1/2");
    CHECK(*parse_rat("-7/3") == make_rat(-7, 3));
    CHECK(*parse_rat(" 5 ") == Rat(5));
    CHECK(!parse_rat("1/0"));
    CHECK(!parse_rat("a"));
    CHECK(decimal_string(make_rat(1, 3), 5) == "0.33333");
    CHECK(decimal_string(make_rat(-1, 2), 1) == "-0.5");
    CHECK(decimal_string(Rat(7), 0) == "7");
}

TEST_CASE("floor sqrt of rationals") {
    CHECK(floor_sqrt(make_rat(1, 4)) == 0);
    CHECK(floor_sqrt(make_rat(9, 4)) == 1);
    CHECK(floor_sqrt(Rat(49)) == 7);
    CHECK(floor_sqrt(make_rat(50, 2)) == 5);
}

TEST_CASE("interval arithmetic is outward exact") {
    RatInterval a(make_rat(1, 3), make_rat(1, 2));
    RatInterval b(make_rat(-1, 5), make_rat(1, 7));
    RatInterval p = a * b;
    CHECK(p.lo == make_rat(-1, 10));  // 1/2 * -1/5
    CHECK(p.hi == make_rat(1, 14));   // 1/2 * 1/7
    CHECK(p.contains_zero());
    CHECK((a + b).lo == make_rat(1, 3) - make_rat(1, 5));
    CHECK(a.certified_sign() == 1);
    CHECK((-a).certified_sign() == -1);
}

TEST_CASE("sqrt enclosures") {
    RatInterval s = sqrt3_enclosure(64);
    CHECK(s.lo * s.lo <= Rat(3));
    CHECK(s.hi * s.hi >= Rat(3));
    CHECK(s.width() <= make_rat(Int(1), pow_int(Int(2), 64)));
    RatInterval t = sqrt_enclosure(make_rat(1, 4), 10);
    CHECK(t.lo == make_rat(1, 2));
    CHECK(t.hi == make_rat(1, 2));
}

TEST_CASE("polynomial arithmetic and gcd") {
    QPoly f = QPoly::from_int_coeffs({-1, 0, 1});            // x^2 - 1
    QPoly g = QPoly::from_int_coeffs({1, 1});                // x + 1
    CHECK(poly_mod(f, g).is_zero());
    CHECK(poly_gcd(f, g) == g.monic());
    QPoly h = f * g;
    CHECK(h.degree() == 3);
    CHECK(h.eval(Rat(2)) == Rat(9));
}

TEST_CASE("resultant and discriminant") {
    // disc(x^2 + bx + c) = b^2 - 4c
    CHECK(disc_monic_int({-1, -1, 1}) == 5);   // x^2 - x - 1
    CHECK(disc_monic_int({-2, 0, 1}) == 8);    // x^2 - 2
    CHECK(disc_monic_int({1, 1, 1}) == -3);    // x^2 + x + 1
    // disc of the (negated) 11th-cyclotomic real subfield generator
    CHECK(disc_monic_int({-1, 3, 3, -4, -1, 1}) == 14641);
}

TEST_CASE("irreducibility decisions") {
    CHECK(is_irreducible_monic({-1, -1, 1}));        // x^2 - x - 1
    CHECK(!is_irreducible_monic({-1, 0, 1}));        // (x-1)(x+1)
    CHECK(!is_irreducible_monic({1, 2, 3, 2, 1}));   // (x^2+x+1)^2
    CHECK(is_irreducible_monic({-1, 3, 3, -4, -1, 1}));
    CHECK(!is_irreducible_monic({0, -1, 0, 0, 0, 1}));   // x^5 - x
    CHECK(is_irreducible_monic({-1, -1, 0, 0, 0, 1}));   // x^5 - x - 1
}

TEST_CASE("root isolation for a totally real quintic") {
    QPoly f = QPoly::from_int_coeffs({-1, 3, 3, -4, -1, 1});
    auto roots = isolate_real_roots(f);
    REQUIRE(roots.size() == 5);
    for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
    Rat tiny = make_rat(Int(1), pow_int(Int(10), 12));
    for (auto& r : roots) {
        refine_root(f, r, tiny);
        CHECK(r.width() <= tiny);
    }
    // the paper's five embeddings of r, to 1e-10
    const char* expected[5] = {"-1.6825070657", "-0.8308300260", "0.2846296765",
                               "1.3097214679", "1.9189859472"};
    for (int i = 0; i < 5; ++i) CHECK(decimal_string(roots[i].mid(), 10) == expected[i]);
}

TEST_CASE("root isolation with an exact rational root") {
    QPoly f = QPoly::from_int_coeffs({0, -1, 0, 1});  // x(x-1)(x+1)
    auto roots = isolate_real_roots(f);
    REQUIRE(roots.size() == 3);
    bool has_zero = false;
    for (const auto& r : roots)
        if (r.is_point() && r.lo == 0) has_zero = true;
    CHECK(has_zero);
}

TEST_CASE("sturm root counting") {
    QPoly f = QPoly::from_int_coeffs({-2, 0, 1});  // x^2 - 2
    SturmChain chain(f);
    CHECK(chain.count_all_real_roots() == 2);
    CHECK(chain.count_roots(Rat(0), Rat(2)) == 1);
    CHECK(chain.count_roots(Rat(-2), Rat(0)) == 1);
    CHECK(chain.count_roots(Rat(2), Rat(3)) == 0);
}

TEST_CASE("integer determinant and kernel") {
    Mat<Int> m(3, 3);
    int vals[3][3] = {{2, 0, 1}, {1, 1, 0}, {0, 3, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
    CHECK(det_bareiss(m) == 5);

    // kernel of [1 2 3] is rank 2 and saturated
    Mat<Int> c(1, 3);
    c(0, 0) = 1;
    c(0, 1) = 2;
    c(0, 2) = 3;
    Mat<Int> k = kernel_basis(c);
    CHECK(k.cols == 2);
    for (int j = 0; j < k.cols; ++j)
        CHECK(k(0, j) + 2 * k(1, j) + 3 * k(2, j) == 0);

    // x + y + z = 0, x - y = 0 -> rank 1 kernel spanned by (1, 1, -2)
    Mat<Int> c2(2, 3);
    c2(0, 0) = 1;
    c2(0, 1) = 1;
    c2(0, 2) = 1;
    c2(1, 0) = 1;
    c2(1, 1) = -1;
    Mat<Int> k2 = kernel_basis(c2);
    REQUIRE(k2.cols == 1);
    CHECK(int_abs(k2(0, 0)) == 1);
    CHECK(k2(0, 0) == k2(1, 0));
    CHECK(k2(2, 0) == -2 * k2(0, 0));
}

TEST_CASE("field determinant and solve over Q") {
    Mat<Rat> a(2, 2);
    a(0, 0) = Rat(1);
    a(0, 1) = make_rat(1, 2);
    a(1, 0) = make_rat(1, 3);
    a(1, 1) = Rat(1);
    CHECK(det_field(a) == Rat(1) - make_rat(1, 6));
    Mat<Rat> x;
    CHECK(solve_field(a, Mat<Rat>::identity(2), x));
    Mat<Rat> prod = a * x;
    CHECK(prod == Mat<Rat>::identity(2));
}

TEST_CASE("row lattice basis") {
    Mat<Int> m(3, 2);
    m(0, 0) = 2;
    m(0, 1) = 0;
    m(1, 0) = 0;
    m(1, 1) = 3;
    m(2, 0) = 2;
    m(2, 1) = 3;  // dependent
    Mat<Int> b = row_lattice_basis(m);
    CHECK(b.rows == 2);
    // determinant of the basis must be +-6 (index of the sublattice)
    Mat<Int> sq(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sq(i, j) = b(i, j);
    CHECK(int_abs(det_bareiss(sq)) == 6);
}
