#include "csurf/eisenstein.hpp"

#include <deque>
#include <set>

namespace csurf::eis {

bool is_integral(const EisVector& v) {
    for (const auto& z : v.v)
        if (!csurf::is_integral(z)) return false;
    return true;
}

Int height(const EisVector& v) {
    Int h(0);
    for (const auto& z : v.v) {
        h = std::max(h, int_abs(rat_num(z.x)));
        h = std::max(h, int_abs(rat_den(z.x)));
        h = std::max(h, int_abs(rat_num(z.y)));
        h = std::max(h, int_abs(rat_den(z.y)));
    }
    return h;
}

QOmega hermitian_form(const EisVector& x, const EisVector& y) {
    CSURF_REQUIRE(x.tag == y.tag, "signature mismatch in hermitian form");
    QOmega first = x.v[0] * y.v[0].conj();
    QOmega rest;
    for (int i = 1; i < 5; ++i) rest += x.v[i] * y.v[i].conj();
    return x.tag == Sig::Sig14 ? first - rest : rest - first;
}

QOmega herm_norm(const EisVector& x) { return hermitian_form(x, x); }

bool vector_less(const EisVector& a, const EisVector& b) {
    for (int i = 0; i < 5; ++i) {
        if (a.v[i].x != b.v[i].x) return a.v[i].x < b.v[i].x;
        if (a.v[i].y != b.v[i].y) return a.v[i].y < b.v[i].y;
    }
    return false;
}

EisVector canonical_unit_rep(const EisVector& v) {
    int first = -1;
    for (int i = 0; i < 5; ++i)
        if (!v.v[i].is_zero()) {
            first = i;
            break;
        }
    CSURF_REQUIRE(first >= 0, "canonical representative of zero vector");
    for (const QOmega& u : eisenstein_units()) {
        if (is_canonical_rep(u * v.v[first])) return u * v;
    }
    throw ContractError("no canonical unit representative found");  // unreachable
}

EisVector LatticeMap::apply(const EisVector& x) const {
    CSURF_REQUIRE(x.tag == tag, "signature mismatch in lattice map");
    EisVector r;
    r.tag = tag;
    for (int i = 0; i < 5; ++i) {
        QOmega acc;
        for (int j = 0; j < 5; ++j) acc += m(i, j) * x.v[j];
        r.v[i] = acc;
    }
    return r;
}

LatticeMap LatticeMap::compose(const LatticeMap& inner) const {
    CSURF_REQUIRE(tag == inner.tag, "signature mismatch in composition");
    return LatticeMap(m * inner.m, tag);
}

LatticeMap LatticeMap::power(unsigned k) const {
    LatticeMap acc = identity(tag);
    LatticeMap base = *this;
    while (k) {
        if (k & 1u) acc = acc.compose(base);
        base = base.compose(base);
        k >>= 1;
    }
    return acc;
}

bool LatticeMap::is_integral() const {
    for (const auto& z : m.a)
        if (!csurf::is_integral(z)) return false;
    return true;
}

bool LatticeMap::preserves_form() const {
    std::array<EisVector, 5> images;
    for (int j = 0; j < 5; ++j) {
        EisVector e;
        e.tag = tag;
        e.v[j] = QOmega(1);
        images[j] = apply(e);
    }
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            EisVector ei, ej;
            ei.tag = ej.tag = tag;
            ei.v[i] = QOmega(1);
            ej.v[j] = QOmega(1);
            if (!(hermitian_form(images[i], images[j]) == hermitian_form(ei, ej))) return false;
        }
    return true;
}

LatticeMap hexaflection(const EisVector& v, const QOmega& mu) {
    CSURF_REQUIRE(v.tag == Sig::Sig14, "hexaflection normals live in E^{1,4}");
    CSURF_REQUIRE(herm_norm(v) == QOmega(-1), "hexaflection requires h0*(v,v) = -1");
    CSURF_REQUIRE(mu == -QOmega::omega() || mu == -QOmega::omega_bar(),
                  "hexaflection unit must have order 6");
    // R(e_j) = e_j + (1 - mu) h0*(e_j, v) v
    QOmega one_minus_mu = QOmega(1) - mu;
    Mat<QOmega> m = Mat<QOmega>::identity(5);
    for (int j = 0; j < 5; ++j) {
        QOmega coef = v.v[j].conj();         // h0*(e_j, v) up to the signature sign
        if (j != 0) coef = -coef;            // Sig14: minus on coordinates 1..4
        QOmega f = one_minus_mu * coef;
        for (int i = 0; i < 5; ++i) m(i, j) += f * v.v[i];
    }
    return LatticeMap(std::move(m), v.tag);
}

std::vector<EisVector> orbit_bfs(const EisVector& start,
                                 const std::vector<LatticeMap>& generators,
                                 const Int& height_bound) {
    for (const auto& g : generators) {
        CSURF_REQUIRE(g.tag == start.tag, "generator signature mismatch");
        CSURF_REQUIRE(g.is_integral() && g.preserves_form(),
                      "orbit generators must be lattice isometries");
    }
    auto cmp = [](const EisVector& a, const EisVector& b) { return vector_less(a, b); };
    std::set<EisVector, decltype(cmp)> seen(cmp);
    std::deque<EisVector> queue;
    if (height(start) <= height_bound) {
        seen.insert(start);
        queue.push_back(start);
    }
    while (!queue.empty()) {
        EisVector cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            EisVector nxt = g.apply(cur);
            if (height(nxt) > height_bound) continue;
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return std::vector<EisVector>(seen.begin(), seen.end());
}

}  // namespace csurf::eis
