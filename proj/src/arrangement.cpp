#include "csurf/arrangement.hpp"

#include <algorithm>
#include <set>

namespace csurf::arr {

namespace {

// largest integer x with d (x q + p)^2 <= R q^2, i.e. x <= sqrt(R/d) - p/q.
// Requires d > 0, R >= 0, q > 0.  Returns false when the range is empty at
// this ceiling (never happens for R >= 0 here).
Int floor_sqrt_shift(const Rat& R, const Rat& d, const Rat& u) {
    // x <= s - u with s = sqrt(R/d) >= 0
    Rat ratio = R / d;
    Int p = rat_num(u), q = rat_den(u);
    // first guess from integer square roots, then exact adjustment
    Int t = floor_sqrt(ratio * Rat(q) * Rat(q));  // floor(q * s)
    Int x = floor_div(t - p, q);
    auto ok = [&](const Int& cand) {
        Rat lhs = d * (Rat(cand) + u) * (Rat(cand) + u);
        return (Rat(cand) + u >= 0) ? lhs <= R : true;  // left side always ok here
    };
    // move up while still valid (at most a couple of steps)
    while (ok(x + 1)) ++x;
    while (!ok(x) && (Rat(x) + u) >= 0) --x;
    return x;
}

struct FPContext {
    int n = 0;
    std::vector<Rat> d;                  // positive diagonal
    std::vector<std::vector<Rat>> u;     // unit upper-triangular coefficients
    Rat target;
    bool exact = true;                   // exact equality vs <= target
    std::vector<std::vector<Int>> found;
};

// Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2
void fp_recurse(FPContext& ctx, int level, std::vector<Int>& x, const Rat& remaining) {
    if (level < 0) {
        // remaining = target - Q(x) accumulated; exact match means 0
        bool accept = ctx.exact ? sign_of(remaining) == 0
                                : (remaining < ctx.target);  // excludes x = 0 (Q > 0)
        if (accept) ctx.found.push_back(x);
        return;
    }
    Rat shift(0);
    for (int j = level + 1; j < ctx.n; ++j) shift += ctx.u[level][j] * Rat(x[j]);
    // d_level (x + shift)^2 <= remaining
    Int hi = floor_sqrt_shift(remaining, ctx.d[level], shift);
    Int lo = -floor_sqrt_shift(remaining, ctx.d[level], -shift);
    for (Int t = lo; t <= hi; ++t) {
        x[level] = t;
        Rat term = ctx.d[level] * (Rat(t) + shift) * (Rat(t) + shift);
        if (term > remaining) continue;
        fp_recurse(ctx, level - 1, x, remaining - term);
    }
    x[level] = 0;
}

std::vector<std::vector<Int>> fp_enumerate(const Mat<Rat>& gram, const Rat& target, bool exact) {
    CSURF_REQUIRE(gram.rows == gram.cols, "Gram matrix must be square");
    int n = gram.rows;
    FPContext ctx;
    ctx.n = n;
    ctx.target = target;
    ctx.exact = exact;
    ctx.d.assign(n, Rat(0));
    ctx.u.assign(n, std::vector<Rat>(n, Rat(0)));
    // symmetric Gaussian reduction: G = U^T D U with unit upper-triangular U
    Mat<Rat> g = gram;
    for (int i = 0; i < n; ++i) {
        if (sign_of(g(i, i)) <= 0) throw DomainError("not-definite");
        ctx.d[i] = g(i, i);
        for (int j = i + 1; j < n; ++j) ctx.u[i][j] = g(i, j) / g(i, i);
        for (int r = i + 1; r < n; ++r)
            for (int c = i + 1; c < n; ++c)
                g(r, c) -= g(i, r) * g(i, c) / g(i, i);
    }
    if (sign_of(target) < 0) return {};
    std::vector<Int> x(n, Int(0));
    fp_recurse(ctx, n - 1, x, target);
    // drop the zero vector, sort for deterministic output
    std::vector<std::vector<Int>> out;
    for (auto& v : ctx.found) {
        bool zero = true;
        for (const auto& t : v)
            if (t != 0) zero = false;
        if (!zero) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<Int>> short_vectors_pd(const Mat<Rat>& gram, const Rat& target) {
    if (sign_of(target) == 0) return {};
    return fp_enumerate(gram, target, /*exact=*/true);
}

std::vector<std::vector<Int>> short_vectors_pd_leq(const Mat<Rat>& gram, const Rat& bound) {
    return fp_enumerate(gram, bound, /*exact=*/false);
}

std::vector<std::vector<Int>> short_vectors(const Mat<Rat>& gram_negdef, const Rat& target) {
    // verify negative definiteness: leading principal minors alternate in sign
    Mat<Rat> neg = -gram_negdef;
    for (int k = 1; k <= neg.rows; ++k) {
        Mat<Rat> lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead(i, j) = neg(i, j);
        if (sign_of(det_field(lead)) <= 0) throw DomainError("not-definite");
    }
    if (sign_of(target) == 0) return {};
    return short_vectors_pd(neg, target);
}

namespace detail {

eis::EisVector from_z_coords(const std::vector<Int>& n) {
    CSURF_REQUIRE(n.size() == 10, "expected 10 integer coordinates");
    eis::EisVector w;
    w.tag = eis::Sig::Sig14;
    for (int i = 0; i < 5; ++i) w.v[i] = QOmega(Rat(n[i]), Rat(n[5 + i]));
    return w;
}

Mat<Rat> real_polar_gram(const std::vector<eis::EisVector>& basis) {
    int r = (int)basis.size();
    Mat<Rat> g(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            QOmega h = eis::hermitian_form(basis[i], basis[j]);
            Rat re = h.x - h.y / 2;  // Re(a + b w) = a - b/2
            g(i, j) = re;
            g(j, i) = re;
        }
    return g;
}

Classification classify_from_complement(const std::vector<eis::EisVector>& basis) {
    Classification result;
    if (basis.empty()) return result;
    Mat<Rat> gram = real_polar_gram(basis);
    // the restriction to p^perp of h0* is negative definite for positive p
    auto sols = short_vectors(gram, Rat(1));
    auto cmp = [](const eis::EisVector& a, const eis::EisVector& b) {
        return eis::vector_less(a, b);
    };
    std::set<eis::EisVector, decltype(cmp)> normals(cmp);
    for (const auto& n : sols) {
        eis::EisVector w;
        w.tag = eis::Sig::Sig14;
        for (size_t b = 0; b < n.size(); ++b) {
            if (n[b] == 0) continue;
            QOmega c{Rat(n[b]), Rat(0)};
            for (int i = 0; i < 5; ++i) w.v[i] += c * basis[b].v[i];
        }
        normals.insert(eis::canonical_unit_rep(w));
    }
    for (const auto& n : normals) result.hyperplanes.emplace_back(n);
    result.k = (int)result.hyperplanes.size();
    CSURF_REQUIRE(result.k <= 4, "more than 4 hyperplanes through a ball point");
    return result;
}

}  // namespace detail

}  // namespace csurf::arr
