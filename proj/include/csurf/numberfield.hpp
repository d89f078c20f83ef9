#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csurf/interval.hpp"
#include "csurf/polynomial.hpp"

namespace csurf::nf {

// Totally real number field Q[x]/(f) with externally supplied arithmetic
// metadata.  Field discriminant and class number are *claimed* inputs: the
// library verifies what is cheap (irreducibility, total reality, disc(f))
// and treats the rest as data to be checked against.
class NumberField {
public:
    // Validates: monic integer f, irreducible over Q, squarefree with
    // degree-many real roots.  Throws DomainError("not-totally-real") or
    // ("reducible-polynomial") otherwise.
    static std::shared_ptr<const NumberField> create(std::vector<Int> coeffs,
                                                     Int claimed_disc,
                                                     Int class_number);

    int degree() const { return (int)coeffs_.size() - 1; }
    const std::vector<Int>& min_poly_coeffs() const { return coeffs_; }
    const QPoly& poly() const { return f_; }
    const QPoly& poly_derivative() const { return fprime_; }
    const Int& poly_disc() const { return poly_disc_; }
    const Int& claimed_disc() const { return claimed_disc_; }
    const Int& class_number() const { return class_number_; }
    bool monogenic() const { return poly_disc_ == claimed_disc_; }

    // Isolating intervals of the real roots, ascending, refined to width
    // <= 2^-bits.  Point intervals are exact roots.
    std::vector<RatInterval> roots(unsigned bits) const;

private:
    NumberField() = default;
    std::vector<Int> coeffs_;
    Int claimed_disc_{0}, class_number_{0}, poly_disc_{0};
    QPoly f_, fprime_;
    std::vector<RatInterval> base_roots_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field in power-basis coordinates.  A null field
// pointer denotes a plain rational constant, so the type models a field
// containing Q and can be used by the generic matrix/cyclo machinery.
struct Felem {
    FieldPtr fld;          // may be null
    std::vector<Rat> c;    // size degree(fld), or size 1 when null

    Felem() : c{Rat(0)} {}
    Felem(int v) : c{Rat(v)} {}  // NOLINT: implicit for generic code
    explicit Felem(Rat v) : c{std::move(v)} {}
    Felem(FieldPtr f, std::vector<Rat> coords);

    bool is_rational() const;
    Rat rational_part() const { return c[0]; }

    friend Felem operator+(const Felem& a, const Felem& b);
    friend Felem operator-(const Felem& a, const Felem& b);
    friend Felem operator*(const Felem& a, const Felem& b);
    friend Felem operator/(const Felem& a, const Felem& b);
    Felem operator-() const;
    friend bool operator==(const Felem& a, const Felem& b);
    bool is_zero() const;
};

Felem generator(const FieldPtr& f);
Felem from_int_coords(const FieldPtr& f, const std::vector<Int>& coords);

Rat trace_q(const Felem& x);  // Tr_{K0/Q}
Rat norm_q(const Felem& x);   // N_{K0/Q}
Felem inverse(const Felem& x);

bool is_integral(const Felem& x);  // integer power-basis coordinates
bool is_unit(const Felem& x);      // integral with field norm +-1

// f'(alpha): generator of the different of the monogenic order Z[alpha].
// Throws DomainError("non-monogenic-unsupported") when disc(f) differs from
// the claimed field discriminant.
Felem different_generator(const FieldPtr& f);

// Certified enclosure of tau_i(x), refined until width <= target.
RatInterval embed_value(const Felem& x, int root_index, const Rat& width_target);

// All real embeddings, ascending by the generator's value.
std::vector<RatInterval> real_embeddings(const Felem& x, const Rat& width_target);

// Exact-zero test first, then adaptive interval refinement; +-1 only.
int certified_sign(const Felem& x, int root_index);

using SignVector = std::vector<int>;  // entries +-1

// Signs of all embeddings of a nonzero element.
SignVector embedding_signs(const Felem& x);

// eps_i tau_i(x) > 0 for all i; x = 0 returns false.
bool epsilon_positive(const Felem& x, const SignVector& eps);

inline bool exactly_one_minus(const SignVector& s) {
    int m = 0;
    for (int v : s) m += (v < 0);
    return m == 1;
}

struct SignSearchResult {
    bool found = false;
    Felem d;
    SignVector eps;
};

// Deterministic search for d = +-d0 * prod units^{e}, e in {0,1}^k, whose
// embedding sign vector satisfies the predicate (default: exactly one -1).
SignSearchResult sign_pattern_search(
    const FieldPtr& f, const std::vector<Felem>& unit_gens,
    const std::function<bool(const SignVector&)>& allowed_eps = exactly_one_minus);

// Record format: `disc; c0,c1,...,cn; h; u1 | u2 | ...`
struct FieldRecord {
    Int disc;
    std::vector<Int> coeffs;
    Int class_number;
    std::vector<std::vector<Int>> units;
};

std::optional<FieldRecord> parse_field_record(const std::string& line, std::string* error);
std::string format_field_record(const FieldRecord& rec);

// Sign context at a fixed real embedding, for the generic certified code.
struct EmbeddingSignCtx {
    int root_index = 0;
    int sign(const Felem& x) const { return x.is_zero() ? 0 : certified_sign(x, root_index); }
};

// generic-scalar hooks
std::vector<Rat> q_coordinates(const Felem& x);
inline bool is_rational_scalar(const Felem& x) { return x.is_rational(); }
inline Rat rational_value(const Felem& x) { return x.rational_part(); }

std::string felem_str(const Felem& x);

}  // namespace csurf::nf
