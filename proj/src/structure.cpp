#include "iwa/structure.hpp"

#include <cassert>

namespace iwa {

const char* nakamura_name(NakamuraClass c) {
    switch (c) {
        case NakamuraClass::Parallelisable: return "i";
        case NakamuraClass::ClassII: return "ii";
        case NakamuraClass::ClassIII: return "iii";
    }
    return "?";
}

namespace {

// Substitute covector j by images[j] (algebra homomorphism on monomials).
template <class C>
Form<C> substitute(const Form<C>& u, const std::array<Form<C>, 6>& images) {
    Form<C> r;
    for (const auto& [m, c] : u.coeffs()) {
        Form<C> prod = Form<C>::one();
        for (int j = 0; j < 6; ++j)
            if (m & (1u << j)) prod = wedge(prod, images[j]);
        r += c * prod;
    }
    return r;
}

Mat frame_matrix(const ParamPoint& t) {
    Mat f = mat_zero(6, 6);
    const GScalar t11 = t.t_at(1, 1), t12 = t.t_at(1, 2);
    const GScalar t21 = t.t_at(2, 1), t22 = t.t_at(2, 2);
    const GScalar t31 = t.t_at(3, 1), t32 = t.t_at(3, 2);
    const GScalar D = t.det();
    // alpha_t = alpha + t11 conj(alpha) + t12 conj(beta), etc.
    f[0][0] = GScalar(1), f[0][3] = t11, f[0][4] = t12;
    f[1][1] = GScalar(1), f[1][3] = t21, f[1][4] = t22;
    f[2][2] = GScalar(1), f[2][3] = t31, f[2][4] = t32, f[2][5] = -D;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) f[3 + i][(j + 3) % 6] = f[i][j].conj();
    return f;
}

}  // namespace

ComplexStructure::ComplexStructure(const ParamPoint& t) : t_(t), frame_(frame_matrix(t)) {
    try {
        frame_inv_ = inverse(frame_);
    } catch (const FrameSingular&) {
        throw FrameSingular("deformation frame is singular at the given parameter point");
    }
}

FormQ ComplexStructure::frame_covector(int index) const {
    FormQ f;
    for (int j = 0; j < 6; ++j) f.add(Mask(1u << j), frame_[index][j]);
    return f;
}

std::array<GScalar, 6> ComplexStructure::dual_vector(int index) const {
    // Dual frame = inverse-transpose of the covector frame.
    std::array<GScalar, 6> v;
    for (int j = 0; j < 6; ++j) v[j] = frame_inv_[j][index];
    return v;
}

FormQ ComplexStructure::to_frame(const FormQ& u) const {
    std::array<FormQ, 6> images;
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) images[j].add(Mask(1u << k), frame_inv_[j][k]);
    return substitute(u, images);
}

FormQ ComplexStructure::from_frame(const FormQ& u) const {
    std::array<FormQ, 6> images;
    for (int k = 0; k < 6; ++k) images[k] = frame_covector(k);
    return substitute(u, images);
}

std::map<std::pair<int, int>, FormQ> ComplexStructure::bidegree_split(const FormQ& u) const {
    std::map<std::pair<int, int>, FormQ> pieces;
    FormQ inframe = to_frame(u);
    for (const auto& [m, c] : inframe.coeffs())
        pieces[{mask_p(m), mask_q(m)}].add(m, c);
    std::map<std::pair<int, int>, FormQ> out;
    for (auto& [pq, piece] : pieces) out[pq] = from_frame(piece);
    return out;
}

FormQ ComplexStructure::bidegree_component(const FormQ& u, int p, int q) const {
    auto pieces = bidegree_split(u);
    auto it = pieces.find({p, q});
    return it == pieces.end() ? FormQ() : it->second;
}

FormQ ComplexStructure::del(const FormQ& u) const {
    FormQ out;
    for (auto& [pq, piece] : bidegree_split(u))
        out += bidegree_component(d(piece), pq.first + 1, pq.second);
    return out;
}

FormQ ComplexStructure::delbar(const FormQ& u) const {
    FormQ out;
    for (auto& [pq, piece] : bidegree_split(u))
        out += bidegree_component(d(piece), pq.first, pq.second + 1);
    return out;
}

bool ComplexStructure::is_pure_type(const FormQ& u, int p, int q) const {
    FormQ inframe = to_frame(u);
    for (const auto& [m, c] : inframe.coeffs())
        if (mask_p(m) != p || mask_q(m) != q) return false;
    return true;
}

ComplexStructure build_structure(const ParamPoint& t) { return ComplexStructure(t); }

NakamuraClass nakamura_class(const ParamPoint& t) {
    bool base_zero = t.t_at(1, 1).is_zero() && t.t_at(1, 2).is_zero() &&
                     t.t_at(2, 1).is_zero() && t.t_at(2, 2).is_zero();
    if (base_zero) return NakamuraClass::Parallelisable;
    return t.det().is_zero() ? NakamuraClass::ClassII : NakamuraClass::ClassIII;
}

SigmaCoefficients sigma_from_frame(const ComplexStructure& J) {
    FormQ dgamma = d(J.frame_covector(2));
    FormQ inframe = J.to_frame(dgamma);
    // Allowed frame 2-form monomials: a^b, a^ab, a^bb, b^ab, b^bb.
    const Mask m_ab = 0x03, m_a_ab = 0x09, m_a_bb = 0x11, m_b_ab = 0x0A, m_b_bb = 0x12;
    for (const auto& [m, c] : inframe.coeffs())
        if (m != m_ab && m != m_a_ab && m != m_a_bb && m != m_b_ab && m != m_b_bb)
            throw StructureEquationViolation(
                "d(gamma_t) leaves the span of the structure-equation 2-forms");
    SigmaCoefficients s;
    s.s12 = inframe.coeff(m_ab);
    s.s11b = inframe.coeff(m_a_ab);
    s.s12b = inframe.coeff(m_a_bb);
    s.s21b = inframe.coeff(m_b_ab);
    s.s22b = inframe.coeff(m_b_bb);
    return s;
}

const SigmaSymbolic& sigma_appendix_symbolic() {
    static const SigmaSymbolic sigma = [] {
        using P = MultiPoly;
        const RatFunc one{GScalar(1)};
        RatFunc t11{P::t(1, 1)}, t12{P::t(1, 2)}, t21{P::t(2, 1)}, t22{P::t(2, 2)};
        RatFunc s11{P::s(1, 1)}, s12{P::s(1, 2)}, s21{P::s(2, 1)}, s22{P::s(2, 2)};
        RatFunc a = one / (one - t22 * s22 - t21 * s12);
        RatFunc b = t21 * s11 + t22 * s21;
        RatFunc c = one / (one - t11 * s11 - a * b * (t11 * s12 + t12 * s22) - s12 * s21);
        RatFunc lambda3 = -t12 * (one + a * s12 * t21 + a * t22 * s22);
        RatFunc mu3 = lambda3 * b * c - t22;
        RatFunc inner = c * (one + t21 * s12 * a + t22 * s22 * a);
        SigmaSymbolic out;
        out.s12 = -c + t21 * lambda3.conj() * c.conj() + t22 * a.conj() * mu3.conj();
        out.s11b = t21 * inner.conj();
        out.s12b = t22 * inner.conj();
        out.s21b = -t11 * inner;
        out.s22b = -t12 * inner;
        return out;
    }();
    return sigma;
}

SigmaCoefficients sigma_appendix(const ParamPoint& t) {
    if (!t.det().is_zero())
        throw WrongClass("appendix sigma formulas require Nakamura class (ii): D(t) = 0");
    const SigmaSymbolic& s = sigma_appendix_symbolic();
    return {s.s12.eval(t), s.s11b.eval(t), s.s12b.eval(t), s.s21b.eval(t), s.s22b.eval(t)};
}

Form<MultiPoly> frame_covector_symbolic(int index) {
    using P = MultiPoly;
    auto cov = [](int j, P coeff) { return Form<P>::monomial(Mask(1u << j), std::move(coeff)); };
    const P one{GScalar(1)};
    switch (index) {
        case 0: return cov(0, one) + cov(3, P::t(1, 1)) + cov(4, P::t(1, 2));
        case 1: return cov(1, one) + cov(3, P::t(2, 1)) + cov(4, P::t(2, 2));
        case 2: return cov(2, one) + cov(3, P::t(3, 1)) + cov(4, P::t(3, 2)) + cov(5, -P::det());
        default: return conj(frame_covector_symbolic(index - 3));
    }
}

std::array<FormQ, 4> gamma_forms(const ComplexStructure& J) {
    SigmaCoefficients s = sigma_from_frame(J);
    if (s.s12.is_zero())
        throw PoleError("sigma_12(t) = 0: Gamma_j(t) are undefined at this point");
    GScalar denom = s.s12.conj();
    FormQ at = J.frame_covector(0), bt = J.frame_covector(1), gt = J.frame_covector(2);
    FormQ abt = J.frame_covector(3), bbt = J.frame_covector(4), gbt = J.frame_covector(5);
    FormQ abg = wedge(at, wedge(bt, gbt));
    std::array<FormQ, 4> out;
    out[0] = wedge(at, wedge(gt, abt)) - (s.s22b / denom) * abg;
    out[1] = wedge(at, wedge(gt, bbt)) - (s.s21b / denom) * abg;
    out[2] = wedge(bt, wedge(gt, abt)) - (s.s12b / denom) * abg;
    out[3] = wedge(bt, wedge(gt, bbt)) - (s.s11b / denom) * abg;
    return out;
}

std::array<FormR, 4> gamma_forms_symbolic() {
    const SigmaSymbolic& s = sigma_appendix_symbolic();
    std::array<FormR, 6> fr;
    for (int j = 0; j < 6; ++j) fr[j] = promote<RatFunc, MultiPoly>(frame_covector_symbolic(j));
    FormR abg = wedge(fr[0], wedge(fr[1], fr[5]));
    RatFunc denom = s.s12.conj();
    std::array<FormR, 4> out;
    out[0] = wedge(fr[0], wedge(fr[2], fr[3])) - (s.s22b / denom) * abg;
    out[1] = wedge(fr[0], wedge(fr[2], fr[4])) - (s.s21b / denom) * abg;
    out[2] = wedge(fr[1], wedge(fr[2], fr[3])) - (s.s12b / denom) * abg;
    out[3] = wedge(fr[1], wedge(fr[2], fr[4])) - (s.s11b / denom) * abg;
    return out;
}

FormQ omega(const ComplexStructure& J) {
    FormQ w;
    const GScalar I = GScalar::i();
    for (int j = 0; j < 3; ++j)
        w += I * wedge(J.frame_covector(j), J.frame_covector(j + 3));
    return w;
}

FormR omega_symbolic() {
    FormR w;
    const RatFunc I{GScalar::i()};
    for (int j = 0; j < 3; ++j) {
        FormR cj = promote<RatFunc, MultiPoly>(frame_covector_symbolic(j));
        FormR cjb = promote<RatFunc, MultiPoly>(frame_covector_symbolic(j + 3));
        w += I * wedge(cj, cjb);
    }
    return w;
}

GScalar c1_of(const ParamPoint& t) {
    return -(t.t_at(1, 1).norm() + t.t_at(2, 1).norm() + t.t_at(3, 1).norm());
}
GScalar c2_of(const ParamPoint& t) {
    return -(t.t_at(1, 2).norm() + t.t_at(2, 2).norm() + t.t_at(3, 2).norm());
}
GScalar c3_of(const ParamPoint& t) { return GScalar(-t.det().norm()); }
GScalar d_of(const ParamPoint& t) {
    return -(t.t_at(1, 2) * t.t_at(1, 1).conj() + t.t_at(2, 2) * t.t_at(2, 1).conj() +
             t.t_at(3, 2) * t.t_at(3, 1).conj());
}

FormQ omega11_closed(const ParamPoint& t) {
    const GScalar I = GScalar::i();
    auto cov = [](int j) { return FormQ::covector(j); };
    FormQ w = (GScalar(1) + c1_of(t)) * (I * wedge(cov(0), cov(3)));
    w += (GScalar(1) + c2_of(t)) * (I * wedge(cov(1), cov(4)));
    w += (GScalar(1) + c3_of(t)) * (I * wedge(cov(2), cov(5)));
    w += d_of(t) * (I * wedge(cov(0), cov(4)));
    w += d_of(t).conj() * (I * wedge(cov(1), cov(3)));
    return w;
}

FormQ omega11_split(const ParamPoint& t) {
    ComplexStructure J0(ParamPoint::zero());
    return J0.bidegree_component(omega(ComplexStructure(t)), 1, 1);
}

FormQ omega0() { return omega11_closed(ParamPoint::zero()); }

TValued01 TValued01::generator(int j, int w) {
    TValued01 theta;
    theta.coeff[j][w - 3] = GScalar(1);
    return theta;
}

TValued01 TValued01::scaled(const GScalar& c) const {
    TValued01 r = *this;
    for (auto& row : r.coeff)
        for (auto& z : row) z *= c;
    return r;
}

TValued01 TValued01::plus(const TValued01& o) const {
    TValued01 r = *this;
    for (int j = 0; j < 3; ++j)
        for (int w = 0; w < 3; ++w) r.coeff[j][w] += o.coeff[j][w];
    return r;
}

FormQ cy_isomorphism(const TValued01& theta, const FormQ& Omega) {
    FormQ out;
    for (int j = 0; j < 3; ++j)
        for (int w = 0; w < 3; ++w) {
            const GScalar& c = theta.coeff[j][w];
            if (c.is_zero()) continue;
            out += c * wedge(contract_basis(j, Omega), FormQ::covector(w + 3));
        }
    return out;
}

FormQ contract_with_gamma(const TValued01& theta) {
    return cy_isomorphism(theta, FormQ::covector(kGamma));
}

}  // namespace iwa
