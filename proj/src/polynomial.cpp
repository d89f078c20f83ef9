#include "csurf/polynomial.hpp"

#include <algorithm>

#include "csurf/matrix.hpp"

namespace csurf {

QPoly QPoly::derivative() const {
    if (c.size() <= 1) return QPoly();
    std::vector<Rat> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = Rat((long)i) * c[i];
    return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
    CSURF_REQUIRE(!is_zero(), "monic of zero polynomial");
    QPoly r = *this;
    Rat inv = 1 / lead();
    for (auto& x : r.c) x *= inv;
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

RatInterval QPoly::eval(const RatInterval& x) const {
    RatInterval acc{Rat(0)};
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + RatInterval(c[i]);
    return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return QPoly(std::move(r));
}

QPoly operator*(const Rat& s, const QPoly& a) {
    std::vector<Rat> r = a.c;
    for (auto& x : r) x *= s;
    return QPoly(std::move(r));
}

QPolyDivRem divrem(const QPoly& a, const QPoly& b) {
    CSURF_REQUIRE(!b.is_zero(), "division by zero polynomial");
    QPoly rem = a;
    std::vector<Rat> quot;
    int db = b.degree();
    if (rem.degree() >= db) quot.assign(rem.degree() - db + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        int k = rem.degree() - db;
        Rat f = rem.lead() / b.lead();
        quot[k] = f;
        for (int i = 0; i <= db; ++i) rem.c[k + i] -= f * b.c[i];
        rem.trim();
    }
    return {QPoly(std::move(quot)), rem};
}

QPoly poly_mod(const QPoly& a, const QPoly& b) { return divrem(a, b).rem; }

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Rat resultant(const QPoly& a, const QPoly& b) {
    int m = a.degree(), n = b.degree();
    CSURF_REQUIRE(m >= 0 && n >= 0, "resultant of zero polynomial");
    if (m == 0) return pow_rat(a.c[0], (unsigned)n);
    if (n == 0) return pow_rat(b.c[0], (unsigned)m);
    Mat<Rat> syl(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl(i, i + j) = a.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) syl(n + i, i + j) = b.c[n - j];
    return det_field(syl);
}

Int disc_monic_int(const std::vector<Int>& coeffs) {
    QPoly f = QPoly::from_int_coeffs(coeffs);
    CSURF_REQUIRE(f.degree() >= 1 && f.lead() == 1, "monic polynomial required");
    unsigned n = (unsigned)f.degree();
    Rat res = resultant(f, f.derivative());
    CSURF_REQUIRE(is_integer(res), "integer resultant expected");
    Int d = rat_num(res);
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

namespace {

// all integer divisors of n != 0, both signs
std::vector<Int> divisors_signed(const Int& n) {
    Int a = int_abs(n);
    std::vector<Int> out;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            Int q = a / d;
            if (q != d) {
                out.push_back(q);
                out.push_back(-q);
            }
        }
    }
    return out;
}

bool has_rational_root(const QPoly& f) {
    // monic integer polynomial: rational roots are integer divisors of f(0)
    if (sign_of(f.coeff(0)) == 0) return true;
    for (const Int& d : divisors_signed(rat_num(f.coeff(0))))
        if (sign_of(f.eval(Rat(d))) == 0) return true;
    return false;
}

// Landau-Mignotte style bound on coefficients of monic factors.
Int factor_coeff_bound(const QPoly& f) {
    Rat norm2(0);
    for (const auto& x : f.c) norm2 += x * x;
    Int b = floor_sqrt(norm2) + 1;
    return (Int(1) << (unsigned)f.degree()) * b;
}

bool has_quadratic_factor(const QPoly& f) {
    // monic x^2 + px + q dividing f: q divides f(0), |p| bounded
    if (sign_of(f.coeff(0)) == 0) return true;
    Int bound = factor_coeff_bound(f);
    for (const Int& q : divisors_signed(rat_num(f.coeff(0)))) {
        for (Int p = -bound; p <= bound; ++p) {
            QPoly g(std::vector<Rat>{Rat(q), Rat(p), Rat(1)});
            if (poly_mod(f, g).is_zero()) return true;
        }
    }
    return false;
}

// mod-p arithmetic on small primes, for the degree > 5 certificate
using PPoly = std::vector<unsigned long>;

PPoly pmod_trim(PPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PPoly pmod_mul(const PPoly& a, const PPoly& b, unsigned long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (unsigned __int128)a[i] * b[j]) % p;
    return pmod_trim(std::move(r));
}

PPoly pmod_rem(PPoly a, const PPoly& m, unsigned long p) {
    auto inv = [&](unsigned long x) {
        long long t = 0, nt = 1, r = (long long)p, nr = (long long)x;
        while (nr) {
            long long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return (unsigned long)((t % (long long)p + (long long)p) % (long long)p);
    };
    unsigned long il = inv(m.back());
    while (a.size() >= m.size()) {
        unsigned long f = (unsigned long)(((unsigned __int128)a.back() * il) % p);
        size_t k = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            unsigned long sub = (unsigned long)(((unsigned __int128)f * m[i]) % p);
            a[k + i] = (a[k + i] + p - sub) % p;
        }
        a = pmod_trim(std::move(a));
        if (a.size() < m.size()) break;
    }
    return a;
}

PPoly pmod_powmod_x(unsigned long e_is_p, unsigned exp_log, const PPoly& m, unsigned long p) {
    // computes x^(p^exp_log) mod m by repeated frobenius-free powering
    PPoly base{0, 1};
    // x^p mod m by square and multiply
    auto powmod = [&](PPoly b, Int e) {
        PPoly r{1};
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = pmod_rem(pmod_mul(r, b, p), m, p);
            b = pmod_rem(pmod_mul(b, b, p), m, p);
            e = e >> 1;
        }
        return r;
    };
    Int e = pow_int(Int((long)e_is_p), exp_log);
    return powmod(base, e);
}

PPoly pmod_gcd(PPoly a, PPoly b, unsigned long p) {
    auto inv = [&](unsigned long x) {
        long long t = 0, nt = 1, r = (long long)p, nr = (long long)x;
        while (nr) {
            long long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return (unsigned long)((t % (long long)p + (long long)p) % (long long)p);
    };
    while (!b.empty()) {
        PPoly r = pmod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        unsigned long il = inv(a.back());
        for (auto& x : a) x = (unsigned long)(((unsigned __int128)x * il) % p);
    }
    return a;
}

// true iff f is irreducible mod p (classic x^(p^k) test); requires p odd
bool irreducible_mod_p(const std::vector<Int>& coeffs, unsigned long p) {
    unsigned n = (unsigned)coeffs.size() - 1;
    PPoly f(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Int r = coeffs[i] % Int((long)p);
        if (r < 0) r += Int((long)p);
        f[i] = r.get_ui();
    }
    f = pmod_trim(std::move(f));
    if (f.size() != coeffs.size()) return false;  // degree dropped
    // x^(p^n) == x mod f
    PPoly xp = pmod_powmod_x(p, n, f, p);
    PPoly x{0, 1};
    PPoly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (!pmod_trim(std::move(diff)).empty()) return false;
    // gcd(x^(p^(n/q)) - x, f) == 1 for prime divisors q of n
    for (unsigned q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool isprime = true;
        for (unsigned d = 2; d * d <= q; ++d)
            if (q % d == 0) isprime = false;
        if (!isprime) continue;
        PPoly xk = pmod_powmod_x(p, n / q, f, p);
        PPoly d = xk;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        d = pmod_trim(std::move(d));
        PPoly g = pmod_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

bool is_irreducible_monic(const std::vector<Int>& coeffs) {
    CSURF_REQUIRE(coeffs.size() >= 2 && coeffs.back() == 1, "monic integer polynomial required");
    QPoly f = QPoly::from_int_coeffs(coeffs);
    int n = f.degree();
    if (n == 1) return true;
    if (has_rational_root(f)) return false;
    if (n <= 3) return true;
    if (has_quadratic_factor(f)) return false;
    if (n <= 5) return true;  // any factorization of degree 4/5 has a factor of degree <= 2
    static const unsigned long primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,
                                           37,  41,  43,  47,  53,  59,  61,  67,  71,  73,
                                           79,  83,  89,  97,  101, 103, 107, 109, 113, 127,
                                           131, 137, 139, 149, 151, 157, 163, 167, 173, 179};
    for (unsigned long p : primes)
        if (irreducible_mod_p(coeffs, p)) return true;
    throw DomainError("irreducibility-undecided",
                      "no mod-p certificate found for degree > 5 input");
}

SturmChain::SturmChain(const QPoly& f) {
    CSURF_REQUIRE(!f.is_zero(), "Sturm chain of zero polynomial");
    seq.push_back(f);
    seq.push_back(f.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        QPoly r = poly_mod(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(Rat(-1) * r);
    }
}

int SturmChain::variations(const Rat& x) const {
    int v = 0, prev = 0;
    for (const auto& p : seq) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    CSURF_REQUIRE(a <= b, "bad root-count interval");
    return variations(a) - variations(b);
}

int SturmChain::count_all_real_roots() const {
    Rat m = cauchy_bound(seq[0]);
    return count_roots(-m, m);
}

Rat cauchy_bound(const QPoly& f) {
    CSURF_REQUIRE(f.degree() >= 1, "root bound needs degree >= 1");
    Rat m(0);
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, rat_abs(f.coeff(i)));
    return 1 + m / rat_abs(f.lead());
}

std::vector<RatInterval> isolate_real_roots(const QPoly& f) {
    QPoly g = poly_gcd(f, f.derivative());
    CSURF_REQUIRE(g.degree() <= 0, "squarefree polynomial required");
    SturmChain chain(f);
    Rat bound = cauchy_bound(f);
    std::vector<RatInterval> out;
    struct Seg {
        Rat a, b;
        int count;
    };
    std::vector<Seg> stack;
    int total = chain.count_roots(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1 && sign_of(f.eval(s.a)) * sign_of(f.eval(s.b)) < 0) {
            out.emplace_back(s.a, s.b);
            continue;
        }
        Rat m = (s.a + s.b) / 2;
        if (sign_of(f.eval(m)) == 0) {
            out.push_back(RatInterval(m));
            // shrink away from the exact root before recursing
            Rat eps = (s.b - s.a) / 64;
            Rat a2 = m - eps, b2 = m + eps;
            int left = chain.count_roots(s.a, a2);
            int right = chain.count_roots(b2, s.b);
            if (left > 0) stack.push_back({s.a, a2, left});
            if (right > 0) stack.push_back({b2, s.b, right});
            continue;
        }
        int left = chain.count_roots(s.a, m);
        int right = s.count - left - 0;
        // m is not a root, so (a,m] and (m,b] partition the roots
        if (left > 0) stack.push_back({s.a, m, left});
        if (right > 0) stack.push_back({m, s.b, right});
    }
    std::sort(out.begin(), out.end(),
              [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
    return out;
}

void refine_root(const QPoly& f, RatInterval& iv, const Rat& target_width, int max_steps) {
    if (iv.is_point()) return;
    int sa = sign_of(f.eval(iv.lo));
    CSURF_REQUIRE(sa != 0 && sa * sign_of(f.eval(iv.hi)) < 0, "not an isolating interval");
    int steps = 0;
    while (iv.width() > target_width) {
        if (++steps > max_steps) throw DomainError("precision-exhausted");
        Rat m = iv.mid();
        int sm = sign_of(f.eval(m));
        if (sm == 0) {
            iv = RatInterval(m);
            return;
        }
        if (sm == sa)
            iv.lo = m;
        else
            iv.hi = m;
    }
}

}  // namespace csurf
