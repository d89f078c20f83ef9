#include "csurf/cm.hpp"

#include <algorithm>
#include <sstream>

namespace csurf::cm {

using nf::Felem;
using nf::FieldPtr;
using nf::SignVector;

CMType CMType::create(FieldPtr K0, SignVector eps) {
    CSURF_REQUIRE(K0 != nullptr, "field required");
    CSURF_REQUIRE((int)eps.size() == K0->degree(), "sign vector length mismatch");
    int minus = 0, at = -1;
    for (size_t i = 0; i < eps.size(); ++i) {
        CSURF_REQUIRE(eps[i] == 1 || eps[i] == -1, "sign vector entries must be +-1");
        if (eps[i] < 0) {
            ++minus;
            at = (int)i;
        }
    }
    CSURF_REQUIRE(minus == 1, "CM type of type (4,1) needs exactly one -1");
    CMType phi;
    phi.K0 = std::move(K0);
    phi.eps = std::move(eps);
    phi.perm.push_back(at);
    for (int i = 0; i < (int)phi.eps.size(); ++i)
        if (i != at) phi.perm.push_back(i);
    return phi;
}

KElem basis_element(const FieldPtr& K0, int index) {
    int n = K0->degree();
    CSURF_REQUIRE(index >= 0 && index < 2 * n, "basis index out of range");
    std::vector<Rat> c(n, Rat(0));
    c[index % n] = 1;
    Felem power(K0, std::move(c));
    return index < n ? KElem(power, Felem(0)) : KElem(Felem(0), power);
}

Rat trace_K_over_Q(const KElem& z) { return nf::trace_q(Felem(2) * z.x - z.y); }

PolarizationData build_polarization(const FieldPtr& K0, const SignVector& eps, const Felem& d) {
    CSURF_REQUIRE(K0 != nullptr, "field required");
    CSURF_REQUIRE((int)eps.size() == K0->degree(), "sign vector length mismatch");
    Int g;
    mpz_gcd(g.get_mpz_t(), K0->poly_disc().get_mpz_t(), Int(3).get_mpz_t());
    if (g != 1) throw DomainError("disc-not-coprime-to-3");
    CSURF_REQUIRE(!d.is_zero(), "zero different generator");

    int n = K0->degree();
    Felem beta = nf::inverse(d);
    Felem third(make_rat(1, 3));
    PolarizationData pol;
    // alpha = -beta / theta = beta * theta / 3 = beta/3 + (2 beta/3) omega
    pol.alpha = KElem(beta * third, Felem(2) * beta * third);

    pol.gram = Mat<Int>(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        KElem wi = basis_element(K0, i);
        for (int j = 0; j < 2 * n; ++j) {
            KElem wj = basis_element(K0, j);
            Rat t = -trace_K_over_Q(pol.alpha * wi * wj.conj());
            if (!is_integer(t))
                throw DomainError("alpha-not-in-codifferent", "fractional trace value");
            pol.gram(i, j) = rat_num(t);
        }
    }
    for (int i = 0; i < 2 * n; ++i) {
        CSURF_REQUIRE(pol.gram(i, i) == 0, "polarization form must be alternating");
        for (int j = 0; j < 2 * n; ++j)
            CSURF_REQUIRE(pol.gram(i, j) == -pol.gram(j, i), "polarization form must be alternating");
    }
    if (det_bareiss(pol.gram) != 1) throw DomainError("not-principal");
    return pol;
}

Mat<Int> sigma_matrix() {
    // multiplication by omega on (w_0..w_4, omega w_0..omega w_4)
    Mat<Int> M(10, 10);
    for (int i = 0; i < 5; ++i) {
        M(5 + i, i) = 1;       // w_i -> omega w_i
        M(i, 5 + i) = -1;      // omega w_i -> -w_i - omega w_i
        M(5 + i, 5 + i) = -1;
    }
    return M;
}

namespace {

RatInterval emb_interval(const Felem& x, const RatInterval& root) {
    if (!x.fld) return RatInterval(x.c[0]);
    return QPoly(std::vector<Rat>(x.c)).eval(root);
}

CInterval emb_K(const KElem& z, const RatInterval& root, int eps_sign, const RatInterval& sqrt3) {
    RatInterval u = emb_interval(z.x, root);
    RatInterval v = emb_interval(z.y, root);
    RatInterval half(make_rat(1, 2));
    RatInterval im = v * (sqrt3 * half);
    if (eps_sign < 0) im = -im;
    return CInterval(u - v * half, im);
}

// Certified positive-definiteness of a symmetric interval matrix via
// elimination pivots: +1 definite, -1 certified not definite, 0 unknown.
int interval_pd_status(std::vector<std::vector<RatInterval>> m) {
    int n = (int)m.size();
    for (int k = 0; k < n; ++k) {
        int s = m[k][k].certified_sign();
        if (s < 0) return -1;
        if (s == 0) return 0;
        for (int i = k + 1; i < n; ++i) {
            RatInterval f = m[i][k] / m[k][k];
            for (int j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return 1;
}

}  // namespace

PositivityResult positivity_check(const CMType& phi, const PolarizationData& pol) {
    PositivityResult res;
    int n = phi.K0->degree();
    // Mumford betas: beta_i = Im tau_i(alpha) = eps_i tau_i(alpha.y) sqrt(3)/2
    res.betas_positive = true;
    for (int i = 0; i < n; ++i)
        if (nf::certified_sign(pol.alpha.y, i) != phi.eps[i]) res.betas_positive = false;

    for (unsigned bits = 64; bits <= 1024; bits *= 2) {
        auto roots = phi.K0->roots(bits);
        RatInterval s3 = sqrt3_enclosure(bits);
        RatInterval half(make_rat(1, 2));
        // Mumford betas, sign included: beta_k = eps_k tau_k(alpha.y) sqrt(3)/2
        std::vector<RatInterval> betas;
        for (int k = 0; k < n; ++k) {
            RatInterval b = emb_interval(pol.alpha.y, roots[k]) * (s3 * half);
            if (phi.eps[k] < 0) b = -b;
            betas.push_back(b);
        }
        // real Gram of H on the Z-basis
        int m = 2 * n;
        std::vector<CInterval> taus((size_t)m * n);
        for (int i = 0; i < m; ++i) {
            KElem wi = basis_element(phi.K0, i);
            for (int k = 0; k < n; ++k)
                taus[(size_t)i * n + k] = emb_K(wi, roots[k], phi.eps[k], s3);
        }
        std::vector<std::vector<RatInterval>> H(m, std::vector<RatInterval>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                RatInterval acc;
                for (int k = 0; k < n; ++k) {
                    CInterval prod = taus[(size_t)i * n + k] * taus[(size_t)j * n + k].conj();
                    acc += betas[k] * prod.re;
                }
                H[i][j] = (RatInterval(Rat(2)) * acc).coarsen(bits);
            }
        int status = interval_pd_status(std::move(H));
        if (status != 0) {
            res.gram_definite = status > 0;
            res.bits_used = bits;
            return res;
        }
    }
    throw DomainError("precision-exhausted", "H-gram definiteness undecided");
}

namespace {

Int pairing(const Mat<Int>& G, const std::vector<Int>& u, const std::vector<Int>& v) {
    Int acc(0);
    int n = G.rows;
    for (int i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        Int row(0);
        for (int j = 0; j < n; ++j) row += G(i, j) * v[j];
        acc += u[i] * row;
    }
    return acc;
}

}  // namespace

Mat<Int> symplectic_basis(const Mat<Int>& gram) {
    int n = gram.rows;
    CSURF_REQUIRE(gram.cols == n, "square matrix required");
    if (n % 2 != 0) throw DomainError("not-symplectic-reducible", "odd rank");
    for (int i = 0; i < n; ++i) {
        if (gram(i, i) != 0) throw DomainError("not-symplectic-reducible", "nonzero diagonal");
        for (int j = 0; j < n; ++j)
            if (gram(i, j) != -gram(j, i))
                throw DomainError("not-symplectic-reducible", "not alternating");
    }
    if (int_abs(det_bareiss(gram)) != 1)
        throw DomainError("not-symplectic-reducible", "not unimodular");

    std::vector<std::vector<Int>> rem;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> row(n, Int(0));
        row[i] = 1;
        rem.push_back(std::move(row));
    }
    std::vector<std::vector<Int>> es, fs;
    while (!rem.empty()) {
        std::vector<Int> e = rem[0];
        size_t m = rem.size();
        std::vector<Int> p(m, Int(0));
        for (size_t j = 1; j < m; ++j) p[j] = pairing(gram, e, rem[j]);
        // integer combination with pairing 1 against e
        Int g(0);
        std::vector<Int> coef(m, Int(0));
        for (size_t j = 1; j < m; ++j) {
            if (p[j] == 0) continue;
            if (g == 0) {
                g = int_abs(p[j]);
                coef[j] = sign_of(p[j]);
                continue;
            }
            Int gn, s, t;
            mpz_gcdext(gn.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                       p[j].get_mpz_t());
            for (size_t l = 1; l < j; ++l) coef[l] *= s;
            coef[j] = t;
            g = gn;
        }
        if (g != 1) throw DomainError("not-symplectic-reducible", "degenerate pairing");
        std::vector<Int> f(n, Int(0));
        for (size_t j = 1; j < m; ++j)
            for (int c = 0; c < n; ++c) f[c] += coef[j] * rem[j][c];
        // project the others onto the orthogonal complement of (e, f)
        Mat<Int> proj((int)m - 1, n);
        for (size_t j = 1; j < m; ++j) {
            Int pf = pairing(gram, rem[j], f);
            Int pe = pairing(gram, rem[j], e);
            for (int c = 0; c < n; ++c) proj((int)j - 1, c) = rem[j][c] - pf * e[c] + pe * f[c];
        }
        Mat<Int> basis = row_lattice_basis(proj);
        rem.clear();
        for (int i = 0; i < basis.rows; ++i) {
            std::vector<Int> row(n);
            for (int c = 0; c < n; ++c) row[c] = basis(i, c);
            rem.push_back(std::move(row));
        }
        es.push_back(std::move(e));
        fs.push_back(std::move(f));
    }
    Mat<Int> U(n, n);
    int gdim = (int)es.size();
    for (int i = 0; i < gdim; ++i)
        for (int c = 0; c < n; ++c) {
            U(i, c) = es[i][c];
            U(gdim + i, c) = fs[i][c];
        }
    if (!(U * gram * U.transpose() == standard_J(gdim)))
        throw DomainError("not-symplectic-reducible", "verification failed");
    return U;
}

namespace {

struct EScalar {
    Int re, om;  // re + om * omega
    bool operator==(const EScalar& o) const { return re == o.re && om == o.om; }
};

struct HForm {
    const Mat<Int>* gram;
    const Mat<Int>* sigma;

    // h(x, y) = <x, sigma y> - omega <x, y> with <,> = -Omega
    EScalar operator()(const std::vector<Int>& x, const std::vector<Int>& y) const {
        int n = gram->rows;
        std::vector<Int> sy(n, Int(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sy[i] += (*sigma)(i, j) * y[j];
        EScalar h;
        h.re = -pairing(*gram, x, sy);
        h.om = pairing(*gram, x, y);
        return h;
    }

    // E-scalar action (p + q omega) . v = p v + q sigma v
    std::vector<Int> scalar_act(const EScalar& s, const std::vector<Int>& v) const {
        int n = gram->rows;
        std::vector<Int> out(n, Int(0));
        for (int i = 0; i < n; ++i) {
            out[i] = s.re * v[i];
            for (int j = 0; j < n; ++j) out[i] += s.om * (*sigma)(i, j) * v[j];
        }
        return out;
    }
};

std::vector<std::vector<Int>> mat_rows(const Mat<Int>& m) {
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < m.rows; ++i) {
        std::vector<Int> r(m.cols);
        for (int j = 0; j < m.cols; ++j) r[j] = m(i, j);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

AdaptedBasis find_adapted_basis(const FieldPtr& K0, const Mat<Int>& gram, const Mat<Int>& sigma,
                                int retries) {
    AdaptedBasis result;
    int n = K0->degree();
    int m = 2 * n;
    HForm h{&gram, &sigma};

    // trace form Tr_{K/Q}(x conj(y)): positive definite integer Gram
    Mat<Rat> T(m, m);
    for (int i = 0; i < m; ++i) {
        KElem wi = basis_element(K0, i);
        for (int j = 0; j < m; ++j) {
            KElem wj = basis_element(K0, j);
            T(i, j) = trace_K_over_Q(wi * wj.conj());
        }
    }

    // stage 0: vector of h-norm -1 inside a growing trace-form radius
    std::vector<Int> g0;
    Rat radius(32);
    for (int attempt = 0; attempt <= retries; ++attempt) {
        result.radius_used = radius;
        auto cands = arr::short_vectors_pd_leq(T, radius);
        for (const auto& cand : cands) {
            EScalar norm = h(cand, cand);
            if (norm.re == -1 && norm.om == 0) {
                g0 = cand;
                break;
            }
        }
        if (!g0.empty()) break;
        radius *= 2;
    }
    if (g0.empty()) return result;

    // orthogonal split: pi(x) = x + h(x, g0) . g0  (valid since h(g0,g0) = -1)
    Mat<Int> proj(m, m);
    for (int i = 0; i < m; ++i) {
        std::vector<Int> e(m, Int(0));
        e[i] = 1;
        std::vector<Int> corr = h.scalar_act(h(e, g0), g0);
        for (int c = 0; c < m; ++c) proj(i, c) = e[c] + corr[c];
    }
    Mat<Int> S = row_lattice_basis(proj);

    std::array<std::vector<Int>, 5> basis;
    basis[0] = g0;
    for (int stage = 1; stage <= n - 1; ++stage) {
        // positive definite E-sublattice: enumerate h-norm 1
        int r = S.rows;
        if (r == 0) return result;
        auto rows = mat_rows(S);
        Mat<Rat> B(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                EScalar v = h(rows[i], rows[j]);
                B(i, j) = Rat(v.re) - Rat(v.om) / 2;  // Re(a + b omega)
            }
        std::vector<std::vector<Int>> sols;
        try {
            sols = arr::short_vectors_pd(B, Rat(1));
        } catch (const DomainError&) {
            return result;
        }
        if (sols.empty()) return result;
        std::vector<Int> gk(m, Int(0));
        for (int c = 0; c < m; ++c)
            for (int b = 0; b < r; ++b) gk[c] += sols[0][b] * rows[b][c];
        basis[stage] = gk;
        if (stage == n - 1) break;
        // split off gk: pi(x) = x - h(x, gk) . gk
        Mat<Int> proj2(r, m);
        for (int i = 0; i < r; ++i) {
            std::vector<Int> corr = h.scalar_act(h(rows[i], gk), gk);
            for (int c = 0; c < m; ++c) proj2(i, c) = rows[i][c] - corr[c];
        }
        S = row_lattice_basis(proj2);
    }

    // verify the unitary Gram and that the E-span is everything
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            EScalar v = h(basis[i], basis[j]);
            Int expect = (i == j) ? Int(i == 0 ? -1 : 1) : Int(0);
            if (!(v.re == expect && v.om == 0)) return result;
        }
    Mat<Int> span(m, m);
    for (int j = 0; j < n; ++j) {
        std::vector<Int> sg(m, Int(0));
        for (int i = 0; i < m; ++i)
            for (int c = 0; c < m; ++c) sg[i] += sigma(i, c) * basis[j][c];
        for (int i = 0; i < m; ++i) {
            span(i, j) = basis[j][i];
            span(i, n + j) = sg[i];
        }
    }
    if (int_abs(det_bareiss(span)) != 1) return result;

    result.found = true;
    result.g = basis;
    return result;
}

Cyclo<Felem> tau1_scalar(const KElem& z) {
    // under tau1 the abstract omega of K evaluates to conj(omega)
    return Cyclo<Felem>(z.x - z.y, -z.y);
}

namespace {

KElem kelem_from_coords(const FieldPtr& K0, const std::vector<Int>& coords) {
    int n = K0->degree();
    std::vector<Rat> u(n), v(n);
    for (int i = 0; i < n; ++i) {
        u[i] = Rat(coords[i]);
        v[i] = Rat(coords[n + i]);
    }
    return KElem(Felem(K0, std::move(u)), Felem(K0, std::move(v)));
}

struct NumericZ {
    bool im_pd = false;
    bool swapped = false;
    unsigned bits = 0;
    Rat symmetry_bound;
    bool computed = false;
};

// interval Gauss-Jordan solve of A X = B over complex intervals
bool csolve(std::vector<std::vector<CInterval>> A, std::vector<std::vector<CInterval>> B,
            std::vector<std::vector<CInterval>>& X) {
    int nn = (int)A.size();
    for (int col = 0; col < nn; ++col) {
        int piv = -1;
        Rat best(0);
        for (int r = col; r < nn; ++r) {
            RatInterval a2 = A[r][col].abs2();
            if (a2.certified_sign() > 0 && a2.lo > best) {
                best = a2.lo;
                piv = r;
            }
        }
        if (piv < 0) return false;
        std::swap(A[piv], A[col]);
        std::swap(B[piv], B[col]);
        CInterval inv = A[col][col].recip();
        for (int j = 0; j < nn; ++j) A[col][j] = A[col][j] * inv;
        for (size_t j = 0; j < B[col].size(); ++j) B[col][j] = B[col][j] * inv;
        for (int r = 0; r < nn; ++r) {
            if (r == col) continue;
            CInterval f = A[r][col];
            for (int j = 0; j < nn; ++j) A[r][j] = A[r][j] - f * A[col][j];
            for (size_t j = 0; j < B[r].size(); ++j) B[r][j] = B[r][j] - f * B[col][j];
        }
    }
    X = std::move(B);
    return true;
}

NumericZ numeric_siegel_point(const CMType& phi, const Mat<Int>& U) {
    NumericZ out;
    int n = phi.K0->degree();
    int m = 2 * n;
    for (unsigned bits = 96; bits <= 1536; bits *= 2) {
        auto roots = phi.K0->roots(bits);
        RatInterval s3 = sqrt3_enclosure(bits);
        for (int flip = 0; flip < 2; ++flip) {
            // rows of U are the symplectic basis; the J-frame swap if needed
            Mat<Int> frame = U;
            if (flip) frame = standard_J(n) * U;
            // period columns Phi(z_j)
            std::vector<std::vector<CInterval>> A(n, std::vector<CInterval>(n));
            std::vector<std::vector<CInterval>> B(n, std::vector<CInterval>(n));
            for (int j = 0; j < m; ++j) {
                std::vector<Int> coords(m);
                for (int c = 0; c < m; ++c) coords[c] = frame(j, c);
                KElem z = kelem_from_coords(phi.K0, coords);
                for (int i = 0; i < n; ++i) {
                    int e = phi.perm[i];
                    CInterval val = emb_K(z, roots[e], phi.eps[e], s3);
                    if (j < n)
                        A[i][j] = val;
                    else
                        B[i][j - n] = val;
                }
            }
            std::vector<std::vector<CInterval>> Z;
            if (!csolve(A, B, Z)) continue;
            // coarsen to keep the PD certification cheap
            for (auto& row : Z)
                for (auto& z : row) {
                    z.re = z.re.coarsen(bits);
                    z.im = z.im.coarsen(bits);
                }
            // symmetrized imaginary part: true Z is symmetric, so intersect
            std::vector<std::vector<RatInterval>> Y(n, std::vector<RatInterval>(n));
            bool consistent = true;
            Rat sym_bound(0);
            for (int i = 0; i < n && consistent; ++i)
                for (int j = 0; j < n && consistent; ++j) {
                    RatInterval a = Z[i][j].im, b = Z[j][i].im;
                    Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
                    if (lo > hi) {
                        consistent = false;
                        break;
                    }
                    Y[i][j] = RatInterval(lo, hi);
                    RatInterval dre = Z[i][j].re - Z[j][i].re;
                    RatInterval dim = Z[i][j].im - Z[j][i].im;
                    sym_bound = std::max(sym_bound, dre.mag());
                    sym_bound = std::max(sym_bound, dim.mag());
                }
            if (!consistent) continue;
            int status = interval_pd_status(Y);
            if (status > 0) {
                out.im_pd = true;
                out.swapped = flip != 0;
                out.bits = bits;
                out.symmetry_bound = sym_bound;
                out.computed = true;
                return out;
            }
            // certified negative: try the swapped frame; unknown: refine
        }
    }
    return out;
}

}  // namespace

std::string galois_splitting_status(const FieldPtr& K0) {
    int n = K0->degree();
    if (!K0->monogenic()) return "simplicity-undecided";
    if (n > 6) return "simplicity-undecided";
    for (unsigned bits = 64; bits <= 512; bits *= 2) {
        auto roots = K0->roots(bits);
        std::vector<std::vector<CInterval>> V(n, std::vector<CInterval>(n));
        for (int i = 0; i < n; ++i) {
            RatInterval pw(Rat(1));
            for (int k = 0; k < n; ++k) {
                V[i][k] = CInterval(pw, RatInterval(Rat(0)));
                pw = pw * roots[i];
            }
        }
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<std::vector<CInterval>> rhs(n, std::vector<CInterval>(1));
            for (int i = 0; i < n; ++i) rhs[i][0] = CInterval(roots[perm[i]], RatInterval(Rat(0)));
            std::vector<std::vector<CInterval>> sol;
            if (!csolve(V, rhs, sol)) break;  // need more precision
            std::vector<Int> coords(n);
            bool isolated = true, excluded = false;
            for (int k = 0; k < n; ++k) {
                const RatInterval& iv = sol[k][0].re;
                Int lo = rat_ceil(iv.lo), hi = rat_floor(iv.hi);
                if (lo > hi) {
                    excluded = true;
                    break;
                }
                if (lo != hi) {
                    isolated = false;
                    break;
                }
                coords[k] = lo;
            }
            if (excluded || !isolated) continue;
            // exact verification: f(g) == 0 in the field
            Felem g = nf::from_int_coords(K0, coords);
            Felem val(0);
            Felem pw(1);
            const auto& mc = K0->min_poly_coeffs();
            for (size_t k = 0; k < mc.size(); ++k) {
                val = val + Felem(Rat(mc[k])) * pw;
                pw = pw * g;
            }
            if (!val.is_zero()) continue;
            if (g == nf::generator(K0)) continue;
            // orbit of the generator under composition with g
            auto compose = [&](const Felem& a) {
                Felem acc(0), p(1);
                for (int k = 0; k < n; ++k) {
                    acc = acc + Felem(a.c[k]) * p;
                    p = p * g;
                }
                return acc;
            };
            std::vector<Felem> orbit{nf::generator(K0)};
            Felem cur = g;
            while ((int)orbit.size() < n + 1) {
                bool seen = false;
                for (const auto& o : orbit)
                    if (o == cur) seen = true;
                if (seen) break;
                orbit.push_back(cur);
                cur = compose(cur);
            }
            if ((int)orbit.size() == n) return "true";
        }
    }
    return "simplicity-undecided";
}

CMCertificate cm_build(const FieldPtr& K0, const std::vector<Felem>& units,
                       const SignVector& eps_request) {
    CMCertificate cert;
    cert.disc = K0->claimed_disc();
    cert.min_poly = K0->min_poly_coeffs();

    // polarization element
    if (eps_request.empty()) {
        auto search = nf::sign_pattern_search(K0, units);
        cert.different_found = search.found;
        if (!search.found) return cert;
        cert.d = search.d;
        cert.eps = search.eps;
    } else {
        Felem d0 = nf::different_generator(K0);
        // honor the request when some +-d0*units product realizes it
        auto search = nf::sign_pattern_search(K0, units, [&](const SignVector& sv) {
            return sv == eps_request;
        });
        cert.different_found = search.found;
        if (!search.found) return cert;
        cert.d = search.d;
        cert.eps = search.eps;
    }
    CMType phi = CMType::create(K0, cert.eps);
    cert.perm = phi.perm;

    PolarizationData pol = build_polarization(K0, cert.eps, cert.d);
    cert.gram = pol.gram;
    cert.gram_det = det_bareiss(pol.gram);
    cert.principally_polarized = cert.gram_det == 1;

    int n = K0->degree();
    Mat<Int> M = sigma_matrix();
    Mat<Int> I10 = Mat<Int>::identity(2 * n);
    cert.sigma_identity = (M * M + M + I10).is_zero();
    cert.sigma_isometry = (M.transpose() * pol.gram * M == pol.gram);
    cert.eigentype_41 = nf::exactly_one_minus(cert.eps) && cert.sigma_identity;

    cert.positivity = positivity_check(phi, pol);

    cert.U = symplectic_basis(pol.gram);
    cert.symplectic_ok = (cert.U * pol.gram * cert.U.transpose() == standard_J(n));

    cert.adapted = find_adapted_basis(K0, pol.gram, M);
    cert.sigma_normalization = cert.adapted.found ? "found" : "sigma-normalization-not-found";

    if (cert.adapted.found) {
        KElem x0 = kelem_from_coords(K0, cert.adapted.g[0]);
        nf::EmbeddingSignCtx ctx{phi.tau1()};
        for (int j = 1; j < 5; ++j) {
            KElem xj = kelem_from_coords(K0, cert.adapted.g[j]);
            cert.b[j - 1] = tau1_scalar(xj / x0);
        }
        // ball membership: |b|^2 < 1 with certified sign at tau1
        Felem one_minus(1);
        for (const auto& z : cert.b) one_minus = one_minus - z.norm();
        cert.b_in_ball = !one_minus.is_zero() && ctx.sign(one_minus) > 0;

        auto rat = siegel::qomega_rationality_general(cert.b);
        cert.b_qomega_rational = rat.rational;
        cert.offending_coordinate = rat.offending_coordinate;

        if (cert.b_in_ball) {
            auto cls = arr::classify_point(arr::BallPointT<Felem>::from_b(cert.b), ctx);
            cert.classify_k = cls.k;

            auto pm = siegel::period_matrix(cert.b);
            auto rep = siegel::riemann_check(pm, ctx);
            cert.riemann_isotropy = rep.isotropy;
            cert.riemann_positivity = rep.positivity;

            auto closed = siegel::siegel_point_closed(cert.b);
            auto solved = siegel::siegel_point_solve(pm);
            cert.dual_path_equal = (closed.Z == solved.Z);

            auto back = siegel::extract_b(closed);
            cert.extract_roundtrip = (back == cert.b);
        }
    }

    NumericZ nz = numeric_siegel_point(phi, cert.U);
    cert.numeric_im_pd = nz.im_pd;
    cert.numeric_frame_swapped = nz.swapped;
    cert.numeric_bits = nz.bits;
    cert.symmetry_residual =
        nz.computed ? "<= " + rat_upper_bound_str(nz.symmetry_bound) : "not-computed";

    cert.simplicity = galois_splitting_status(K0);
    return cert;
}

CMCertificate cm_build(const nf::FieldRecord& rec, const SignVector& eps_request) {
    auto K0 = nf::NumberField::create(rec.coeffs, rec.disc, rec.class_number);
    std::vector<Felem> units;
    units.reserve(rec.units.size());
    for (const auto& u : rec.units) {
        Felem elem = nf::from_int_coords(K0, u);
        CSURF_REQUIRE(nf::is_unit(elem), "field record supplies a non-unit");
        units.push_back(std::move(elem));
    }
    return cm_build(K0, units, eps_request);
}

namespace {

std::string poly_str(const std::vector<Int>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        Int c = coeffs[i];
        if (!first && c > 0) os << "+";
        first = false;
        if (i == 0) {
            os << c.get_str();
        } else {
            if (c == -1)
                os << "-";
            else if (c != 1)
                os << c.get_str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

const char* yn(bool b) { return b ? "pass" : "FAIL"; }

}  // namespace

std::string format_certificate(const CMCertificate& cert) {
    std::ostringstream os;
    os << "cm-certificate\n";
    os << "  field\n";
    os << "    disc            = " << cert.disc.get_str() << "\n";
    os << "    min-poly        = " << poly_str(cert.min_poly) << "\n";
    os << "  polarization-element\n";
    os << "    search          = " << (cert.different_found ? "found" : "none") << "\n";
    if (!cert.different_found) return os.str();
    os << "    d               = " << nf::felem_str(cert.d) << "\n";
    os << "    eps             = ";
    for (size_t i = 0; i < cert.eps.size(); ++i) os << (cert.eps[i] > 0 ? "+" : "-");
    os << "\n";
    os << "    tau1-index      = " << cert.perm[0] << "\n";
    os << "  polarization\n";
    os << "    gram-integral   = pass\n";
    os << "    gram-alternating= pass\n";
    os << "    gram-det        = " << cert.gram_det.get_str() << " ("
       << yn(cert.principally_polarized) << ")\n";
    os << "  order-3-symmetry\n";
    os << "    sigma^2+sigma+1 = " << yn(cert.sigma_identity) << "\n";
    os << "    sigma-isometry  = " << yn(cert.sigma_isometry) << "\n";
    os << "    eigentype-(4,1) = " << yn(cert.eigentype_41) << "\n";
    os << "  positivity\n";
    os << "    betas-positive  = " << yn(cert.positivity.betas_positive) << "\n";
    os << "    H-gram-definite = " << yn(cert.positivity.gram_definite) << " (bits="
       << cert.positivity.bits_used << ")\n";
    os << "  symplectic-normalization\n";
    os << "    U-identity      = " << yn(cert.symplectic_ok) << "\n";
    os << "  period-data\n";
    os << "    adapted-basis   = " << cert.sigma_normalization << "\n";
    if (cert.adapted.found) {
        for (int i = 0; i < 4; ++i) {
            os << "    b[" << (i + 1) << "]            = (" << nf::felem_str(cert.b[i].x) << ") + ("
               << nf::felem_str(cert.b[i].y) << ")*w\n";
        }
        os << "    b-in-ball       = " << yn(cert.b_in_ball) << "\n";
        os << "    b-K-rational    = pass\n";
        os << "    b-in-Q(w)       = " << (cert.b_qomega_rational ? "yes" : "no (expected)") << "\n";
        os << "    classify        = "
           << (cert.classify_k == 0 ? "smooth"
                                    : (cert.classify_k < 0 ? "not-run"
                                                           : "nodal k=" + std::to_string(cert.classify_k)))
           << "\n";
        os << "    riemann-isotropy= " << yn(cert.riemann_isotropy) << "\n";
        os << "    riemann-positive= " << yn(cert.riemann_positivity) << "\n";
        os << "    dual-path-Z     = " << yn(cert.dual_path_equal) << "\n";
        os << "    extract-b-round = " << yn(cert.extract_roundtrip) << "\n";
    }
    os << "  numeric-siegel-point\n";
    os << "    im-Z-definite   = " << yn(cert.numeric_im_pd) << " (bits=" << cert.numeric_bits
       << (cert.numeric_frame_swapped ? ", frame=J*U" : ", frame=U") << ")\n";
    os << "    symmetry-bound  = " << cert.symmetry_residual << "\n";
    os << "  simplicity\n";
    os << "    status          = " << cert.simplicity << "\n";
    os << "  overall\n";
    os << "    exact-checks    = " << yn(cert.exact_checks_pass()) << "\n";
    return os.str();
}

}  // namespace csurf::cm
