#pragma once

#include <array>
#include <string>
#include <vector>

#include "csurf/arrangement.hpp"
#include "csurf/numberfield.hpp"
#include "csurf/siegel.hpp"

namespace csurf::cm {

// Elements of K = K0(sqrt(-3)) = K0(omega) as pairs over the basis {1, omega}
// of K0-elements; sqrt(-3) is the element 1 + 2*omega.
using KElem = Cyclo<nf::Felem>;

// CM type of type (4,1): signs eps_i fix tau_i(sqrt(-3)) = eps_i * theta with
// exactly one -1; perm places the -1 embedding first.
struct CMType {
    nf::FieldPtr K0;
    nf::SignVector eps;      // ascending-root order
    std::vector<int> perm;   // perm[0] = index of the -1 sign

    static CMType create(nf::FieldPtr K0, nf::SignVector eps);
    int tau1() const { return perm[0]; }
};

// Z-basis of O_K used throughout: w_i = r^i (i = 0..4), w_{5+i} = omega r^i.
// Valid because disc(K0) is required to be coprime to 3.
KElem basis_element(const nf::FieldPtr& K0, int index);

struct PolarizationData {
    KElem alpha;     // -beta/theta = beta*theta/3 with beta = d^{-1}
    Mat<Int> gram;   // Omega(w_i, w_j) = -Tr_{K/Q}(alpha w_i conj(w_j))
};

Rat trace_K_over_Q(const KElem& z);  // Tr_{K0/Q}(2x - y)

// Builds Omega on the fixed Z-basis and verifies it is integral, alternating
// and unimodular.  Throws DomainError("alpha-not-in-codifferent") on a
// fractional trace and DomainError("not-principal") when det != 1.
PolarizationData build_polarization(const nf::FieldPtr& K0, const nf::SignVector& eps,
                                    const nf::Felem& d);

// Multiplication by omega on the fixed Z-basis (independent of the field).
Mat<Int> sigma_matrix();

// Certified positivity of H(x,y) = 2 sum beta_i tau_i(x) conj(tau_i(y)):
// the Mumford betas have certified positive sign and the real Gram of H is
// certified positive definite by interval principal minors.
struct PositivityResult {
    bool betas_positive = false;
    bool gram_definite = false;
    unsigned bits_used = 0;
    bool certified() const { return betas_positive && gram_definite; }
};
PositivityResult positivity_check(const CMType& phi, const PolarizationData& pol);

// Integer U with U * gram * U^T = J for an alternating unimodular gram.
// Throws DomainError("not-symplectic-reducible") otherwise.
Mat<Int> symplectic_basis(const Mat<Int>& gram);

// sigma-adapted unitary basis: E-basis g0..g4 of the lattice with
// h(x, y) = <x, sigma y> - omega <x, y>  (here <,> = -Omega) equal to
// diag(-1, 1, 1, 1, 1).  Search is complete within a trace-form radius,
// retried with doubled radius; failure is reported, not fatal.
struct AdaptedBasis {
    bool found = false;
    std::array<std::vector<Int>, 5> g;
    Rat radius_used;
};
AdaptedBasis find_adapted_basis(const nf::FieldPtr& K0, const Mat<Int>& gram,
                                const Mat<Int>& sigma, int retries = 3);

// tau1-image of a K-element as a scalar over K0 with the standard complex
// omega: under tau1, omega_K evaluates to conj(omega).
Cyclo<nf::Felem> tau1_scalar(const KElem& z);

struct CMCertificate {
    // field data
    Int disc;
    std::vector<Int> min_poly;

    // sign-pattern search
    bool different_found = false;
    nf::Felem d;
    nf::SignVector eps;
    std::vector<int> perm;

    // polarization
    bool principally_polarized = false;
    Mat<Int> gram;
    Int gram_det;

    // order-3 symmetry
    bool sigma_identity = false;     // M^2 + M + I = 0
    bool sigma_isometry = false;     // M^T gram M = gram
    bool eigentype_41 = false;       // holomorphic eigenvalues (wbar, w, w, w, w)

    // positivity
    PositivityResult positivity;

    // symplectic normalization
    bool symplectic_ok = false;      // U gram U^T = J
    Mat<Int> U;

    // sigma-adapted period data (exact path)
    std::string sigma_normalization; // "found" | "sigma-normalization-not-found"
    AdaptedBasis adapted;
    std::array<Cyclo<nf::Felem>, 4> b;  // normalized period vector, tau1 frame
    bool b_in_ball = false;
    bool b_qomega_rational = true;      // expected false for a quintic CM field
    int offending_coordinate = -1;
    int classify_k = -1;                // 0 = smooth
    bool riemann_isotropy = false;
    bool riemann_positivity = false;
    bool dual_path_equal = false;       // closed-form Z == A^{-1} B
    bool extract_roundtrip = false;

    // numeric Siegel point from the symplectic frame
    bool numeric_im_pd = false;
    bool numeric_frame_swapped = false;  // J*U frame gave the positive orientation
    std::string symmetry_residual;       // certified bound on |Z - Z^T|
    unsigned numeric_bits = 0;

    // simplicity
    std::string simplicity;  // "true" | "simplicity-undecided"

    bool exact_checks_pass() const {
        return different_found && principally_polarized && sigma_identity && sigma_isometry &&
               eigentype_41 && positivity.certified() && symplectic_ok &&
               sigma_normalization == "found" && b_in_ball && !b_qomega_rational &&
               classify_k == 0 && riemann_isotropy && riemann_positivity && dual_path_equal &&
               extract_roundtrip && numeric_im_pd;
    }
};

// Full pipeline.  `eps_request`, when nonempty, overrides the sign-pattern
// search (it must still make d epsilon-positive with exactly one -1).
CMCertificate cm_build(const nf::FieldPtr& K0, const std::vector<nf::Felem>& units,
                       const nf::SignVector& eps_request = {});
CMCertificate cm_build(const nf::FieldRecord& rec, const nf::SignVector& eps_request = {});

// Exact splitting test: does min_poly factor into linear factors over K0?
// Returns "true" when five exact automorphism images of the generator are
// found and verified; "simplicity-undecided" otherwise.
std::string galois_splitting_status(const nf::FieldPtr& K0);

std::string format_certificate(const CMCertificate& cert);

}  // namespace csurf::cm
