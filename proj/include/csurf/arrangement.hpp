#pragma once

#include <vector>

#include "csurf/eisenstein.hpp"

namespace csurf {

// Exact sign context for plain rationals (used by the generic certified
// routines; number-field scalars supply their own context).
struct RatSignCtx {
    int sign(const Rat& q) const { return sign_of(q); }
};

inline std::vector<Rat> q_coordinates(const Rat& q) { return {q}; }

// Scalar-field introspection used by the Q(omega)-rationality test.
inline bool is_rational_scalar(const Rat&) { return true; }
inline Rat rational_value(const Rat& q) { return q; }

}  // namespace csurf

namespace csurf::arr {

// A point of the ball in projective coordinates (v0, ..., v4) over F(omega),
// conventionally normalized to v0 = 1 when v0 != 0.  Positivity means
// h0*(v, v) > 0.
template <class F>
struct BallPointT {
    std::array<Cyclo<F>, 5> v{};

    BallPointT() = default;
    explicit BallPointT(std::array<Cyclo<F>, 5> coords) : v(std::move(coords)) {}
    static BallPointT from_b(const std::array<Cyclo<F>, 4>& b) {
        BallPointT p;
        p.v[0] = Cyclo<F>(F(1));
        for (int i = 0; i < 4; ++i) p.v[i + 1] = b[i];
        return p;
    }
    bool normalized() const { return v[0] == Cyclo<F>(F(1)); }
};

using BallPoint = BallPointT<Rat>;

// h0*(p, p) as an element of F (the value is real); throws on a nonreal norm.
template <class F>
F ball_norm(const BallPointT<F>& p) {
    Cyclo<F> acc = p.v[0] * p.v[0].conj();
    for (int i = 1; i < 5; ++i) acc -= p.v[i] * p.v[i].conj();
    CSURF_REQUIRE(acc.is_real(), "hermitian norm must be real");
    return acc.x;
}

// Hyperplane of the arrangement: normal v in E^{1,4} with h0*(v) = -1,
// stored as the canonical unit representative.
struct Hyperplane {
    eis::EisVector normal;

    explicit Hyperplane(const eis::EisVector& n) : normal(eis::canonical_unit_rep(n)) {
        CSURF_REQUIRE(eis::is_integral(normal), "hyperplane normal must be integral");
        CSURF_REQUIRE(eis::herm_norm(normal) == QOmega(-1), "hyperplane normal must have norm -1");
    }
    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.normal == b.normal;
    }
};

// Z-basis of {w in E^5 : h0*(w, p) = 0}, returned as integral Eisenstein
// vectors (tag Sig14).  p must be exact; rank is twice the E-rank.
template <class F>
std::vector<eis::EisVector> orthogonal_complement_lattice(const BallPointT<F>& p);

// All integer vectors n with n^T gram n = target for a positive definite
// rational Gram (exact Fincke-Pohst).  Deterministic ascending order.
// Throws DomainError("not-definite") when gram is not positive definite.
std::vector<std::vector<Int>> short_vectors_pd(const Mat<Rat>& gram, const Rat& target);

// Same, for all 0 < n^T gram n <= bound.
std::vector<std::vector<Int>> short_vectors_pd_leq(const Mat<Rat>& gram, const Rat& bound);

// Spec-facing wrapper: lattice with *negative definite* Gram; enumerates all
// vectors of form value exactly -target (target > 0 an integer).
std::vector<std::vector<Int>> short_vectors(const Mat<Rat>& gram_negdef, const Rat& target);

struct Classification {
    int k = 0;  // number of hyperplanes through the point, 0 = smooth
    std::vector<Hyperplane> hyperplanes;
    bool smooth() const { return k == 0; }
};

// Certified nodal classification of an exact, h0*-positive point.
template <class F, class Ctx>
Classification classify_point(const BallPointT<F>& p, const Ctx& ctx);

inline Classification classify_point(const BallPoint& p) {
    return classify_point(p, RatSignCtx{});
}

// -- implementation of the templated pieces -------------------------------

namespace detail {

// Gram matrix of the real polar form Re h0* on a list of integral vectors.
Mat<Rat> real_polar_gram(const std::vector<eis::EisVector>& basis);

// integer column vector -> Eisenstein vector, coordinates (x0..x4, y0..y4)
eis::EisVector from_z_coords(const std::vector<Int>& n);

Classification classify_from_complement(const std::vector<eis::EisVector>& basis);

}  // namespace detail

template <class F>
std::vector<eis::EisVector> orthogonal_complement_lattice(const BallPointT<F>& p) {
    // h0*(w, p) = sum_i s_i w_i conj(p_i) with s = (+, -, -, -, -); writing
    // w_i = x_i + y_i w, the coefficient of x_i is c_i = s_i conj(p_i) and the
    // coefficient of y_i is c_i * omega.  Each F(omega) constraint splits into
    // 2 * dim_Q(F) rational rows.
    std::vector<std::vector<Rat>> rows;
    size_t width = 0;
    auto add_entry = [&](int col, const Cyclo<F>& coef) {
        std::vector<Rat> xs = q_coordinates(coef.x);
        std::vector<Rat> ys = q_coordinates(coef.y);
        size_t d = std::max(xs.size(), ys.size());
        if (rows.empty()) {
            // allocated lazily once the first dimension is known
        }
        for (size_t t = 0; t < d; ++t) {
            size_t rx = 2 * t, ry = 2 * t + 1;
            while (rows.size() <= ry) rows.emplace_back(10, Rat(0));
            if (t < xs.size()) rows[rx][col] += xs[t];
            if (t < ys.size()) rows[ry][col] += ys[t];
        }
        width = std::max(width, 2 * d);
    };
    for (int i = 0; i < 5; ++i) {
        Cyclo<F> c = p.v[i].conj();
        if (i != 0) c = -c;
        add_entry(i, c);                      // coefficient of x_i
        add_entry(5 + i, c * Cyclo<F>::omega());  // coefficient of y_i
    }
    // clear denominators per row, assemble integer matrix
    Mat<Int> C((int)rows.size(), 10);
    for (size_t r = 0; r < rows.size(); ++r) {
        Int lcm(1);
        for (const Rat& q : rows[r]) {
            Int d = rat_den(q);
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
            lcm = lcm / g * d;
        }
        for (int c = 0; c < 10; ++c) {
            Rat scaled = rows[r][c] * Rat(lcm);
            C((int)r, c) = rat_num(scaled);
        }
    }
    Mat<Int> K = kernel_basis(C);
    std::vector<eis::EisVector> out;
    out.reserve(K.cols);
    for (int j = 0; j < K.cols; ++j) {
        std::vector<Int> col(10);
        for (int i = 0; i < 10; ++i) col[i] = K(i, j);
        out.push_back(detail::from_z_coords(col));
    }
    return out;
}

template <class F, class Ctx>
Classification classify_point(const BallPointT<F>& p, const Ctx& ctx) {
    CSURF_REQUIRE(ctx.sign(ball_norm(p)) > 0, "point is not h0*-positive");
    auto basis = orthogonal_complement_lattice(p);
    return detail::classify_from_complement(basis);
}

}  // namespace csurf::arr
