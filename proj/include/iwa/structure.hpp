#pragma once

#include <array>
#include <map>
#include <utility>

#include "iwa/form.hpp"
#include "iwa/linalg.hpp"
#include "iwa/poly.hpp"

namespace iwa {

enum class NakamuraClass { Parallelisable, ClassII, ClassIII };
const char* nakamura_name(NakamuraClass c);

// Deformed complex structure at an evaluated parameter point: the invertible
// 6x6 frame for (alpha_t, beta_t, gamma_t, conjugates) in the fixed basis,
// its inverse, and the dual (1,0) vector frame.
class ComplexStructure {
  public:
    explicit ComplexStructure(const ParamPoint& t);

    const ParamPoint& t() const { return t_; }
    const Mat& frame() const { return frame_; }
    const Mat& frame_inverse() const { return frame_inv_; }

    FormQ frame_covector(int index) const;  // 0..5 -> alpha_t .. conj gamma_t
    // Dual frame vector xi_i (i = 0..2) in fixed dual coordinates.
    std::array<GScalar, 6> dual_vector(int index) const;

    // Coordinates of u in the t-frame monomial algebra / back to fixed basis.
    FormQ to_frame(const FormQ& u) const;
    FormQ from_frame(const FormQ& u) const;

    std::map<std::pair<int, int>, FormQ> bidegree_split(const FormQ& u) const;
    FormQ bidegree_component(const FormQ& u, int p, int q) const;
    FormQ del(const FormQ& u) const;      // (p,q) -> (p+1,q) parts of d
    FormQ delbar(const FormQ& u) const;   // (p,q) -> (p,q+1) parts of d
    bool is_pure_type(const FormQ& u, int p, int q) const;

  private:
    ParamPoint t_;
    Mat frame_, frame_inv_;
};

struct SigmaCoefficients {
    GScalar s12;   // coefficient of alpha_t ^ beta_t
    GScalar s11b;  // alpha_t ^ conj(alpha_t)
    GScalar s12b;  // alpha_t ^ conj(beta_t)
    GScalar s21b;  // beta_t ^ conj(alpha_t)
    GScalar s22b;  // beta_t ^ conj(beta_t)
};

struct SigmaSymbolic {
    RatFunc s12, s11b, s12b, s21b, s22b;
};

ComplexStructure build_structure(const ParamPoint& t);
NakamuraClass nakamura_class(const ParamPoint& t);

// Solves d(gamma_t) against the J_t 2-form frame basis.
SigmaCoefficients sigma_from_frame(const ComplexStructure& J);
// Closed forms for Nakamura class (ii); throws WrongClass when D(t) != 0.
SigmaCoefficients sigma_appendix(const ParamPoint& t);
// The same closed forms as formal rational functions in t11..s32.
const SigmaSymbolic& sigma_appendix_symbolic();

// Symbolic frame covectors alpha_t, ..., conj gamma_t over polynomial coefficients.
Form<MultiPoly> frame_covector_symbolic(int index);

// Gamma_1..Gamma_4 for an evaluated structure (sigma taken from the frame).
std::array<FormQ, 4> gamma_forms(const ComplexStructure& J);
// Symbolic Gamma_j built from the appendix sigma closed forms.
std::array<FormR, 4> gamma_forms_symbolic();

FormQ omega(const ComplexStructure& J);      // i a_t^ab_t + i b_t^bb_t + i g_t^gb_t
FormQ omega11_closed(const ParamPoint& t);   // closed-form J0-(1,1) component
FormQ omega11_split(const ParamPoint& t);    // via bidegree split, for cross-checks
FormQ omega0();                              // canonical metric form at t = 0
FormR omega_symbolic();

// T-valued (0,1) element with constant coefficients: coeff[j][w] multiplies
// xi_j tensor (covector w), j = 0..2 over the fixed (1,0) duals, w = 3..5 barred.
struct TValued01 {
    std::array<std::array<GScalar, 3>, 3> coeff{};  // [vector j][bar index w-3]
    static TValued01 generator(int j, int w);
    TValued01 scaled(const GScalar& c) const;
    TValued01 plus(const TValued01& o) const;
};

// theta -| Omega : contract the vector factor, wedge the (0,1) factor.
FormQ cy_isomorphism(const TValued01& theta, const FormQ& Omega);
FormQ contract_with_gamma(const TValued01& theta);

GScalar c1_of(const ParamPoint& t);
GScalar c2_of(const ParamPoint& t);
GScalar c3_of(const ParamPoint& t);
GScalar d_of(const ParamPoint& t);

}  // namespace iwa
