// One-shot derivation of the checked-in field data file.
//
// For each target discriminant this tool brute-forces a monic integer
// quintic with disc(f) equal to the target (hence a monogenic generator,
// since these discriminants admit no square factor compatible with a
// smaller field discriminant), filters by total reality and
// irreducibility, then box-searches small units of Z[r] and keeps a subset
// whose sign vectors span enough of {+-1}^5 for the sign-pattern scan to
// succeed.  Every supplied unit is verified to have field norm +-1.
//
// Usage: derive-fields [--out FILE]

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <vector>

#include "csurf/numberfield.hpp"
#include "csurf/scan.hpp"

using namespace csurf;

namespace {

using I128 = __int128;

long long to_ll(I128 v) { return (long long)v; }

Int make_int(long long v) { return Int((long)v); }

// Bareiss determinant of a small integer matrix; values stay well inside
// 128 bits for 9x9 Sylvester matrices with entries bounded by ~60.
bool det_bareiss_128(std::vector<std::vector<I128>>& a, I128& out) {
    int n = (int)a.size();
    I128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                out = 0;
                return true;
            }
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    out = sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
    return true;
}

// disc of monic quintic x^5 + c4 x^4 + ... + c0 via the 9x9 Sylvester
// resultant of f and f'; disc = Res(f, f') for n = 5 (sign (-1)^{10} = +1).
long long disc_quintic(const std::array<long long, 5>& c) {
    // f coefficients descending: 1, c4, c3, c2, c1, c0
    long long f[6] = {1, c[4], c[3], c[2], c[1], c[0]};
    long long fp[5] = {5, 4 * c[4], 3 * c[3], 2 * c[2], c[1]};
    std::vector<std::vector<I128>> syl(9, std::vector<I128>(9, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 6; ++j) syl[i][i + j] = f[j];
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) syl[4 + i][i + j] = fp[j];
    I128 det = 0;
    det_bareiss_128(syl, det);
    return to_ll(det);
}

// norm of sum coords[i] r^i via the integer multiplication matrix mod f
long long field_norm(const std::array<long long, 5>& mc /* c0..c4 of f */,
                     const std::array<long long, 5>& coords) {
    // columns: coords of x * r^j reduced mod f
    std::vector<std::vector<I128>> m(5, std::vector<I128>(5, 0));
    std::array<I128, 5> col;
    for (int i = 0; i < 5; ++i) col[i] = coords[i];
    for (int j = 0; j < 5; ++j) {
        for (int i = 0; i < 5; ++i) m[i][j] = col[i];
        if (j == 4) break;
        // multiply by r: shift and reduce by r^5 = -(c4 r^4 + ... + c0)
        I128 top = col[4];
        for (int i = 4; i > 0; --i) col[i] = col[i - 1];
        col[0] = 0;
        if (top != 0)
            for (int i = 0; i < 5; ++i) col[i] -= top * mc[i];
    }
    I128 det = 0;
    det_bareiss_128(m, det);
    return to_ll(det);
}

struct FoundField {
    std::array<long long, 5> c;  // c0..c4 of the monic quintic
    std::vector<std::array<long long, 5>> units;
};

}  // namespace

int main(int argc, char** argv) {
    std::string out_path = "data/fields_disc_lt_1e5.txt";
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--out") && i + 1 < argc) out_path = argv[++i];

    const std::vector<long long> targets = {14641, 24217, 36497, 38569, 65657,
                                            70601, 81509, 81589, 89417};
    std::map<long long, FoundField> found;

    // pass 1: polynomials by coefficient box search
    std::cerr << "searching quintics..." << std::endl;
    for (long long a4 = -3; a4 <= 3 && found.size() < targets.size(); ++a4)
        for (long long a3 = -8; a3 <= 8; ++a3)
            for (long long a2 = -9; a2 <= 9; ++a2)
                for (long long a1 = -9; a1 <= 9; ++a1)
                    for (long long a0 = -6; a0 <= 6; ++a0) {
                        std::array<long long, 5> c = {a0, a1, a2, a3, a4};
                        long long d = disc_quintic(c);
                        if (d <= 0) continue;
                        if (std::find(targets.begin(), targets.end(), d) == targets.end())
                            continue;
                        if (found.count(d)) continue;
                        // verify totally real + irreducible with exact machinery
                        std::vector<Int> coeffs = {make_int(a0), make_int(a1), make_int(a2),
                                                   make_int(a3), make_int(a4), Int(1)};
                        try {
                            auto fld = nf::NumberField::create(coeffs, make_int(d), Int(1));
                            (void)fld;
                        } catch (...) {
                            continue;
                        }
                        found[d] = FoundField{c, {}};
                        std::cerr << "  disc " << d << ": x^5";
                        for (int k = 4; k >= 0; --k)
                            if (c[k]) std::cerr << (c[k] > 0 ? "+" : "") << c[k] << "x^" << k;
                        std::cerr << std::endl;
                    }
    for (long long t : targets)
        if (!found.count(t)) {
            std::cerr << "no polynomial found for disc " << t << " in the search box\n";
            return 1;
        }

    // pass 2: units by box search, greedily keeping sign-class generators
    for (long long t : targets) {
        auto& ff = found[t];
        std::vector<Int> coeffs = {make_int(ff.c[0]), make_int(ff.c[1]), make_int(ff.c[2]),
                                   make_int(ff.c[3]), make_int(ff.c[4]), Int(1)};
        auto fld = nf::NumberField::create(coeffs, make_int(t), Int(1));

        std::vector<std::array<long long, 5>> units;
        const long long B = 6;
        std::array<long long, 5> u{};
        for (u[0] = -B; u[0] <= B; ++u[0])
            for (u[1] = -B; u[1] <= B; ++u[1])
                for (u[2] = -B; u[2] <= B; ++u[2])
                    for (u[3] = -B; u[3] <= B; ++u[3])
                        for (u[4] = -B; u[4] <= B; ++u[4]) {
                            long long n = field_norm(ff.c, u);
                            if (n != 1 && n != -1) continue;
                            bool scalar = !u[1] && !u[2] && !u[3] && !u[4];
                            if (scalar) continue;  // skip +-1
                            units.push_back(u);
                        }
        // sort by height then lexicographic for determinism
        std::sort(units.begin(), units.end(), [](const auto& a, const auto& b) {
            long long ha = 0, hb = 0;
            for (int i = 0; i < 5; ++i) {
                ha = std::max(ha, std::llabs(a[i]));
                hb = std::max(hb, std::llabs(b[i]));
            }
            if (ha != hb) return ha < hb;
            return a < b;
        });
        // greedy: keep units whose embedding-sign class (a vector over F2)
        // enlarges the span of the classes collected so far
        unsigned basis_by_lead[5] = {0, 0, 0, 0, 0};
        auto reduce_f2 = [&](unsigned v) {
            for (int b = 4; b >= 0; --b)
                if (((v >> b) & 1u) && basis_by_lead[b]) v ^= basis_by_lead[b];
            return v;
        };
        for (const auto& cand : units) {
            if (ff.units.size() >= 5) break;
            std::vector<Int> ic(5);
            for (int i = 0; i < 5; ++i) ic[i] = make_int(cand[i]);
            nf::Felem elem = nf::from_int_coords(fld, ic);
            auto signs = nf::embedding_signs(elem);
            unsigned mask = 0;
            for (int i = 0; i < 5; ++i)
                if (signs[i] < 0) mask |= 1u << i;
            unsigned red = reduce_f2(mask);
            if (red == 0) continue;  // sign class already reachable
            int lead = 4;
            while (!((red >> lead) & 1u)) --lead;
            basis_by_lead[lead] = red;
            ff.units.push_back(cand);
        }
        std::cerr << "disc " << t << ": " << ff.units.size() << " units kept of "
                  << units.size() << " found" << std::endl;
    }

    // pass 3: emit records and verify the scan passes
    std::vector<nf::FieldRecord> records;
    for (long long t : targets) {
        const auto& ff = found[t];
        nf::FieldRecord rec;
        rec.disc = make_int(t);
        rec.coeffs = {make_int(ff.c[0]), make_int(ff.c[1]), make_int(ff.c[2]),
                      make_int(ff.c[3]), make_int(ff.c[4]), Int(1)};
        rec.class_number = 1;
        for (const auto& u : ff.units) {
            std::vector<Int> coords(5);
            for (int i = 0; i < 5; ++i) coords[i] = make_int(u[i]);
            rec.units.push_back(coords);
        }
        std::string status = scan::scan_one(rec);
        std::cerr << "disc " << t << ": scan says " << status << std::endl;
        if (status != "True") {
            std::cerr << "unit set insufficient for disc " << t << "; enlarge the box\n";
            return 1;
        }
        records.push_back(std::move(rec));
    }

    std::ofstream out(out_path);
    out << "# totally real quintic fields with discriminant < 10^5\n";
    out << "# format: disc; c0,c1,...,c5; class number; unit coordinates (power basis) "
           "separated by '|'\n";
    out << "# produced by tools/derive_fields.cpp (bounded-coefficient search; all units "
           "verified to have norm +-1)\n";
    for (const auto& rec : records) out << nf::format_field_record(rec) << "\n";
    std::cerr << "wrote " << out_path << std::endl;
    return 0;
}
