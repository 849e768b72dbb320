#pragma once

#include <array>
#include <string>
#include <vector>

#include "iwa/cohomology.hpp"
#include "iwa/hodge.hpp"
#include "iwa/structure.hpp"

namespace iwa {

enum class PairingKind { Q, H, QB, HB };

// Weight-three intersection forms on X (n = 3): Q = -int u^v, H = -i int u^conj(v).
GScalar pairing_q(const FormQ& u, const FormQ& v);
GScalar pairing_h(const FormQ& u, const FormQ& v);
// Torus-side forms of weight two (n = 2): Q_B = -int_B u^v, H_B = +int_B u^conj(v).
// Integration over B_t extracts the coefficient of the frame monomial
// alpha_t^beta_t^conj(alpha_t)^conj(beta_t), total measure one.
GScalar integrate_torus(const FormQ& u, const ComplexStructure& J);
GScalar pairing_qb(const FormQ& u, const FormQ& v, const ComplexStructure& J);
GScalar pairing_hb(const FormQ& u, const FormQ& v, const ComplexStructure& J);

GScalar pairing(PairingKind kind, const FormQ& u, const FormQ& v, const ComplexStructure& J);

// Sign vector of the (sesquilinear) pairing on the given basis. The matrix
// must be diagonal in this basis with nonzero real diagonal; the paper's
// signature statements are all of this shape.
std::vector<int> signature(PairingKind kind, const std::vector<FormQ>& basis,
                           const ComplexStructure& J);

// Harmonic 3-forms split into the +i / -i eigenspaces of the Hodge star.
struct StarSplit {
    std::vector<FormQ> plus, minus;
};
StarSplit star_split(const Metric& m);

struct SymplecticBasis {
    std::vector<FormQ> eta;  // eta_0..eta_4, real d-closed 3-forms
    std::vector<FormQ> nu;   // nu_0..nu_4
};

// Default eta_0..eta_4 (real, Q-isotropic, with the required H-negativity).
std::array<FormQ, 5> default_eta_forms();
// Real basis of H^3_DR as conjugation-fixed class representatives.
std::vector<FormQ> real_h3_basis();

// Completes the given real isotropic eta family (eta[0] = eta0 first) to a
// symplectic basis of (H^3(X,R), Q); deterministic over the rationals, all
// relations re-verified exactly.
SymplecticBasis symplectic_complete(const std::vector<FormQ>& etas);

// u_t = alpha_t ^ beta_t ^ gamma_t as a form; u'_t = u_t / Q(u_t, eta_0).
FormQ holomorphic_volume(const ComplexStructure& J);

// z_i(t) = Q(u'_t, eta_i) against the default symplectic basis.
std::array<GScalar, 4> coordinates_z(const ParamPoint& t);
std::array<GScalar, 4> coordinates_z_closed(const ParamPoint& t);  // closed forms

// w_i(t) = Q_B(v'_t, eta_{i,B}) with v_t = alpha_t ^ beta_t and the
// deterministic completion of eta_{0,B} (obtained from eta_0 by stripping gamma).
std::array<GScalar, 4> coordinates_w(const ParamPoint& t);
FormQ eta0_torus();  // eta_{0,B}

// Yukawa coupling against u^2 via the trivialisations of K_X and Lambda^3 T.
GScalar yukawa(const TValued01& th1, const TValued01& th2, const TValued01& th3,
               const FormQ& u);

struct PotentialSymmetryReport {
    Mat z_jacobian;        // dz_i / dt_a at the point (4x4)
    Mat asymmetry;         // J^T P - P^T J, zero iff dPsi_i/dz_j symmetric
    bool symmetric = false;
    bool jacobian_invertible = false;
    bool holomorphic = false;  // anti-holomorphic jets of z and Psi vanish
};
PotentialSymmetryReport potential_symmetry_check(const ParamPoint& t);

// Second-order central-difference cross-check of
//   Y2(d/dz_i, d/dz_j, d/dz_k) = -Q(du/dz_k, d2u/dz_i dz_j)
// on a rational grid of the given step in first-order z-coordinates.
// Returns the maximum |difference|^2-free absolute deviation as a rational.
mpq_class yukawa_cross_oracle_max_error(const mpq_class& step);

// The four Aeppli (2,2) basis forms i x^conj(y) ^ i gamma^conj(gamma).
std::array<FormQ, 4> aeppli_22_basis_forms(const ComplexStructure& J);

struct MirrorImage {
    std::array<GScalar, 4> coeffs;  // against the 4-class basis at t = 0
    bool marked = false;            // image equals the marked class [omega_0^2]_A
};

MirrorImage mirror_map_positive(const ParamPoint& t);
std::array<GScalar, 4> mirror_map_positive_closed(const ParamPoint& t);
MirrorImage mirror_map_complexified(const ParamPoint& t);

// Matrices over the documented bases; see the per-function comments in the
// implementation for the exact basis conventions.
Mat iso_A_matrix(const ComplexStructure& J);           // [Gamma_j] -> H^{2,2}_A(X_t)
Mat mirror_differential_at_zero();                      // d(complexified map) at 0
Mat lift_I_matrix(const ComplexStructure& J, const Metric& m);  // Q_omega into H^4
Mat bc31_to_aeppli(const ComplexStructure& J);

struct VhsReport {
    bool transversality = false;
    bool f2_holomorphic = false;
    bool h12_nonholomorphic_witness = false;
    bool fg_holomorphic = false;
    std::vector<std::string> witnesses;
};
VhsReport vhs_checks();

}  // namespace iwa
