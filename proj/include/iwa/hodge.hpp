#pragma once

#include <map>
#include <vector>

#include "iwa/cohomology.hpp"
#include "iwa/structure.hpp"

namespace iwa {

enum class LaplacianKind { DelBar, Del, DeRham, Aeppli };

// Hermitian metric on the structure's frame: omega = i sum H_ij phi_i ^ conj(phi_j).
// H is the identity for the canonical metrics omega_t; omega11 metrics carry a
// non-trivial gram over the fixed frame.
class Metric {
  public:
    Metric(ComplexStructure J, Mat gram3);  // throws NotPositive unless H > 0
    static Metric canonical(const ComplexStructure& J);       // omega_t on X_t
    static Metric omega11_on_x0(const ParamPoint& t);         // omega_t^{1,1} on X_0

    const ComplexStructure& structure() const { return J_; }
    const Mat& gram() const { return H_; }
    FormQ metric_form() const;           // omega as an invariant 2-form
    GScalar volume_scale() const;        // dV_omega = det(H) * frame unit volume

    // Inner products in frame coordinates; forms may be of any pure degree.
    GScalar inner(const FormQ& u, const FormQ& v) const;
    FormQ hodge_star(const FormQ& u) const;

    // Gram matrix of the frame monomials of the given degree.
    const Mat& gram_matrix(int degree) const;

  private:
    GScalar mono_inner(Mask a, Mask b) const;
    ComplexStructure J_;
    Mat H_;      // 3x3 gram of the metric on the (1,0) frame vectors
    Mat G6_;     // induced gram of the six frame covectors
    GScalar detH_;
    mutable std::map<int, Mat> mono_gram_;
};

enum class FormOp { D, Del, DelBar };

// Operator matrix in frame coordinates between full-degree monomial bases.
Mat op_matrix_degree(const ComplexStructure& J, FormOp op, int degree);

// Formal adjoint of `op` applied to u (computed through exact Gram matrices).
FormQ adjoint(FormOp op, const FormQ& u, const Metric& m);

// Exact kernel of the chosen Laplacian on (p,q)-forms (DeRham: on k-forms,
// pass the degree as p). Kernels are computed as intersections of the kernels
// of the defining first-order pieces.
std::vector<FormQ> laplacian_kernel(LaplacianKind kind, int p_or_k, int q, const Metric& m);

// Minimal L2-norm solution x of delbar x = y; NotExact when y is not exact.
FormQ min_norm_solve_delbar(const FormQ& y, const Metric& m);

// Unique Aeppli-harmonic representative of the class of u (u in ker del delbar).
FormQ aeppli_harmonic_representative(const FormQ& u, const Metric& m);

// The sGG lift Q_omega: Aeppli (2,2) class -> d-closed 4-form representative
// Omega = Omega31 + Omega22 + conj(Omega31) of the lifted De Rham class.
FormQ gauduchon_lift(const FormQ& aeppli_class_rep, const Metric& m);

// Canonical surjection P_t: {Omega}_DR -> [Omega^{2,2}_t]_A; returns the
// J_t-(2,2) component of the d-closed input form.
FormQ canonical_surjection_p(const FormQ& closed4, const ComplexStructure& J);

struct MetricPredicates {
    bool positive = false;
    bool gauduchon = false;
    bool strongly_gauduchon = false;
    bool balanced = false;
};

MetricPredicates metric_predicates(const Metric& m);

}  // namespace iwa
