#include "csurf/numberfield.hpp"

#include <algorithm>
#include <sstream>

#include "csurf/matrix.hpp"

namespace csurf::nf {

std::shared_ptr<const NumberField> NumberField::create(std::vector<Int> coeffs,
                                                       Int claimed_disc,
                                                       Int class_number) {
    CSURF_REQUIRE(coeffs.size() >= 2, "degree >= 1 required");
    CSURF_REQUIRE(coeffs.back() == 1, "monic integer polynomial required");
    if (!is_irreducible_monic(coeffs)) throw DomainError("reducible-polynomial");
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->coeffs_ = std::move(coeffs);
    f->claimed_disc_ = std::move(claimed_disc);
    f->class_number_ = std::move(class_number);
    f->f_ = QPoly::from_int_coeffs(f->coeffs_);
    f->fprime_ = f->f_.derivative();
    f->poly_disc_ = disc_monic_int(f->coeffs_);
    f->base_roots_ = isolate_real_roots(f->f_);
    if ((int)f->base_roots_.size() != f->degree()) throw DomainError("not-totally-real");
    return f;
}

std::vector<RatInterval> NumberField::roots(unsigned bits) const {
    std::vector<RatInterval> out = base_roots_;
    Rat target = make_rat(Int(1), pow_int(Int(2), bits));
    for (auto& iv : out) refine_root(f_, iv, target);
    return out;
}

namespace {

const FieldPtr& common_field(const Felem& a, const Felem& b) {
    if (a.fld && b.fld) {
        CSURF_REQUIRE(a.fld == b.fld, "elements of different number fields");
        return a.fld;
    }
    return a.fld ? a.fld : b.fld;
}

std::vector<Rat> promote_coords(const Felem& x, const FieldPtr& f) {
    if (!f) return x.c;
    std::vector<Rat> c(f->degree(), Rat(0));
    for (size_t i = 0; i < x.c.size(); ++i) c[i] = x.c[i];
    return c;
}

// reduce polynomial coords mod the (monic) minimal polynomial
std::vector<Rat> reduce_mod(std::vector<Rat> poly, const FieldPtr& f) {
    int n = f->degree();
    const auto& mc = f->min_poly_coeffs();
    for (int d = (int)poly.size() - 1; d >= n; --d) {
        Rat lead = poly[d];
        if (sign_of(lead) == 0) continue;
        for (int i = 0; i < n; ++i) poly[d - n + i] -= lead * Rat(mc[i]);
        poly[d] = 0;
    }
    poly.resize(n);
    return poly;
}

}  // namespace

Felem::Felem(FieldPtr f, std::vector<Rat> coords) : fld(std::move(f)), c(std::move(coords)) {
    CSURF_REQUIRE(fld != nullptr, "field required");
    CSURF_REQUIRE((int)c.size() <= fld->degree(), "too many coordinates");
    c.resize(fld->degree(), Rat(0));
}

bool Felem::is_rational() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (sign_of(c[i]) != 0) return false;
    return true;
}

bool Felem::is_zero() const {
    for (const auto& q : c)
        if (sign_of(q) != 0) return false;
    return true;
}

Felem operator+(const Felem& a, const Felem& b) {
    const FieldPtr& f = common_field(a, b);
    std::vector<Rat> x = promote_coords(a, f), y = promote_coords(b, f);
    for (size_t i = 0; i < y.size(); ++i) x[i] += y[i];
    return f ? Felem(f, std::move(x)) : Felem(std::move(x[0]));
}

Felem operator-(const Felem& a, const Felem& b) {
    const FieldPtr& f = common_field(a, b);
    std::vector<Rat> x = promote_coords(a, f), y = promote_coords(b, f);
    for (size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
    return f ? Felem(f, std::move(x)) : Felem(std::move(x[0]));
}

Felem Felem::operator-() const {
    Felem r = *this;
    for (auto& q : r.c) q = -q;
    return r;
}

Felem operator*(const Felem& a, const Felem& b) {
    const FieldPtr& f = common_field(a, b);
    if (!f) return Felem(Rat(a.c[0] * b.c[0]));
    std::vector<Rat> x = promote_coords(a, f), y = promote_coords(b, f);
    std::vector<Rat> prod(x.size() + y.size() - 1, Rat(0));
    for (size_t i = 0; i < x.size(); ++i) {
        if (sign_of(x[i]) == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) prod[i + j] += x[i] * y[j];
    }
    return Felem(f, reduce_mod(std::move(prod), f));
}

bool operator==(const Felem& a, const Felem& b) {
    const FieldPtr& f = common_field(a, b);
    return promote_coords(a, f) == promote_coords(b, f);
}

Felem inverse(const Felem& x) {
    CSURF_REQUIRE(!x.is_zero(), "inverse of zero field element");
    if (!x.fld) return Felem(Rat(1 / x.c[0]));
    // extended Euclid: u * g == 1 mod f
    QPoly f = x.fld->poly();
    QPoly g(std::vector<Rat>(x.c));
    QPoly r0 = f, r1 = g;
    QPoly t0, t1 = QPoly::constant(Rat(1));
    while (!r1.is_zero() && r1.degree() > 0) {
        auto qr = divrem(r0, r1);
        QPoly t2 = t0 - qr.quot * t1;
        r0 = std::move(r1);
        r1 = std::move(qr.rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    CSURF_REQUIRE(!r1.is_zero(), "non-invertible element (reducible modulus?)");
    Rat inv_c = 1 / r1.c[0];
    std::vector<Rat> coords(x.fld->degree(), Rat(0));
    for (size_t i = 0; i < t1.c.size() && i < coords.size(); ++i) coords[i] = t1.c[i] * inv_c;
    return Felem(x.fld, std::move(coords));
}

Felem operator/(const Felem& a, const Felem& b) { return a * inverse(b); }

Felem generator(const FieldPtr& f) {
    CSURF_REQUIRE(f && f->degree() >= 1, "field with degree >= 1 required");
    std::vector<Rat> c(f->degree(), Rat(0));
    if (f->degree() == 1) {
        // x = -c0 in a degree-1 field
        c[0] = Rat(-f->min_poly_coeffs()[0]);
    } else {
        c[1] = 1;
    }
    return Felem(f, std::move(c));
}

Felem from_int_coords(const FieldPtr& f, const std::vector<Int>& coords) {
    std::vector<Rat> c(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) c[i] = Rat(coords[i]);
    return Felem(f, std::move(c));
}

namespace {

Mat<Rat> mult_matrix(const Felem& x) {
    const FieldPtr& f = x.fld;
    int n = f->degree();
    Mat<Rat> m(n, n);
    std::vector<Rat> col = promote_coords(x, f);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m(i, j) = col[i];
        if (j + 1 < n) {
            // multiply by alpha: shift then reduce
            std::vector<Rat> shifted(col.size() + 1, Rat(0));
            for (size_t i = 0; i < col.size(); ++i) shifted[i + 1] = col[i];
            col = reduce_mod(std::move(shifted), f);
        }
    }
    return m;
}

}  // namespace

Rat trace_q(const Felem& x) {
    if (!x.fld) return x.c[0];
    Mat<Rat> m = mult_matrix(x);
    Rat t(0);
    for (int i = 0; i < m.rows; ++i) t += m(i, i);
    return t;
}

Rat norm_q(const Felem& x) {
    if (!x.fld) return x.c[0];
    if (x.is_zero()) return Rat(0);
    return det_field(mult_matrix(x));
}

bool is_integral(const Felem& x) {
    for (const auto& q : x.c)
        if (!is_integer(q)) return false;
    return true;
}

bool is_unit(const Felem& x) {
    if (!is_integral(x)) return false;
    Rat n = norm_q(x);
    return n == 1 || n == -1;
}

Felem different_generator(const FieldPtr& f) {
    CSURF_REQUIRE(f != nullptr, "field required");
    if (!f->monogenic())
        throw DomainError("non-monogenic-unsupported",
                          "disc(f) != claimed field discriminant");
    std::vector<Rat> c = f->poly_derivative().c;
    c.resize(f->degree(), Rat(0));
    return Felem(f, std::move(c));
}

RatInterval embed_value(const Felem& x, int root_index, const Rat& width_target) {
    if (!x.fld) return RatInterval(x.c[0]);
    const FieldPtr& f = x.fld;
    CSURF_REQUIRE(root_index >= 0 && root_index < f->degree(), "embedding index out of range");
    QPoly g(std::vector<Rat>(x.c));
    unsigned bits = 16;
    for (int attempt = 0; attempt < 24; ++attempt) {
        RatInterval root = f->roots(bits)[root_index];
        RatInterval val = g.eval(root);
        if (val.width() <= width_target) return val;
        bits *= 2;
    }
    throw DomainError("precision-exhausted");
}

std::vector<RatInterval> real_embeddings(const Felem& x, const Rat& width_target) {
    int n = x.fld ? x.fld->degree() : 1;
    std::vector<RatInterval> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(embed_value(x, i, width_target));
    return out;
}

int certified_sign(const Felem& x, int root_index) {
    CSURF_REQUIRE(!x.is_zero(), "certified sign of zero");
    if (!x.fld) return sign_of(x.c[0]);
    Rat target = make_rat(1, 1 << 16);
    for (int attempt = 0; attempt < 24; ++attempt) {
        RatInterval val = embed_value(x, root_index, target);
        int s = val.certified_sign();
        if (s != 0) return s;
        target = target * target;  // square the width target each round
    }
    throw DomainError("precision-exhausted");
}

SignVector embedding_signs(const Felem& x) {
    CSURF_REQUIRE(!x.is_zero(), "sign vector of zero");
    int n = x.fld ? x.fld->degree() : 1;
    SignVector s(n);
    for (int i = 0; i < n; ++i) s[i] = certified_sign(x, i);
    return s;
}

bool epsilon_positive(const Felem& x, const SignVector& eps) {
    if (x.is_zero()) return false;
    int n = x.fld ? x.fld->degree() : 1;
    CSURF_REQUIRE((int)eps.size() == n, "sign vector length mismatch");
    for (int i = 0; i < n; ++i)
        if (certified_sign(x, i) != eps[i]) return false;
    return true;
}

SignSearchResult sign_pattern_search(const FieldPtr& f,
                                     const std::vector<Felem>& unit_gens,
                                     const std::function<bool(const SignVector&)>& allowed_eps) {
    Felem d0 = different_generator(f);
    for (const auto& u : unit_gens)
        CSURF_REQUIRE(is_unit(u), "sign_pattern_search requires verified units");
    size_t k = unit_gens.size();
    CSURF_REQUIRE(k <= 20, "too many unit generators");
    // sign bit outermost, then exponent vectors in lexicographic order; the
    // sign pattern depends only on the exponents mod 2
    for (int sign_bit = 0; sign_bit < 2; ++sign_bit) {
        for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
            Felem d = d0;
            if (sign_bit) d = -d;
            for (size_t i = 0; i < k; ++i) {
                // lexicographic over (e_1, ..., e_k): e_i is the high bit first
                if (mask & (size_t(1) << (k - 1 - i))) d = d * unit_gens[i];
            }
            SignVector sv = embedding_signs(d);
            if (allowed_eps(sv)) return {true, d, sv};
        }
    }
    return {};
}

std::optional<FieldRecord> parse_field_record(const std::string& line, std::string* error) {
    auto fail = [&](const std::string& msg) -> std::optional<FieldRecord> {
        if (error) *error = msg;
        return std::nullopt;
    };
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char ch : line) {
            if (ch == ';') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
    }
    if (parts.size() != 4) return fail("expected 4 ';'-separated fields");
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    auto parse_int_list = [&](const std::string& text, std::vector<Int>& out) {
        std::string cur;
        std::istringstream is(text);
        while (std::getline(is, cur, ',')) {
            std::string t = trim(cur);
            if (t.empty()) return false;
            try {
                out.emplace_back(t, 10);
            } catch (...) {
                return false;
            }
        }
        return !out.empty();
    };
    FieldRecord rec;
    std::string d = trim(parts[0]);
    try {
        rec.disc = Int(d, 10);
    } catch (...) {
        return fail("bad discriminant");
    }
    if (!parse_int_list(parts[1], rec.coeffs)) return fail("bad coefficient list");
    std::string h = trim(parts[2]);
    try {
        rec.class_number = Int(h, 10);
    } catch (...) {
        return fail("bad class number");
    }
    std::string units = trim(parts[3]);
    if (!units.empty()) {
        std::string cur;
        std::istringstream is(units);
        while (std::getline(is, cur, '|')) {
            std::vector<Int> u;
            if (!parse_int_list(cur, u)) return fail("bad unit coordinates");
            rec.units.push_back(std::move(u));
        }
    }
    return rec;
}

std::string format_field_record(const FieldRecord& rec) {
    std::ostringstream os;
    os << rec.disc.get_str() << "; ";
    for (size_t i = 0; i < rec.coeffs.size(); ++i) {
        if (i) os << ",";
        os << rec.coeffs[i].get_str();
    }
    os << "; " << rec.class_number.get_str() << "; ";
    for (size_t u = 0; u < rec.units.size(); ++u) {
        if (u) os << " | ";
        for (size_t i = 0; i < rec.units[u].size(); ++i) {
            if (i) os << ",";
            os << rec.units[u][i].get_str();
        }
    }
    return os.str();
}

std::vector<Rat> q_coordinates(const Felem& x) { return x.c; }

std::string felem_str(const Felem& x) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < x.c.size(); ++i) {
        if (sign_of(x.c[i]) == 0) continue;
        if (!first && sign_of(x.c[i]) > 0) os << "+";
        first = false;
        if (i == 0) {
            os << rat_str(x.c[i]);
        } else {
            if (x.c[i] == -1)
                os << "-";
            else if (!(x.c[i] == 1))
                os << rat_str(x.c[i]) << "*";
            os << "r";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace csurf::nf
