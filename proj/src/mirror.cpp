#include "iwa/mirror.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace iwa {

namespace {

void require_degree(const FormQ& u, int k, const char* who) {
    if (!u.is_zero() && u.degree() != k)
        throw DegreeMismatch(std::string(who) + ": wrong form degree");
}

FormQ cov(int j) { return FormQ::covector(j); }

FormJ promote_jet(const FormQ& u) {
    FormJ r;
    for (const auto& [m, c] : u.coeffs()) r.add(m, Jet1(c));
    return r;
}

}  // namespace

GScalar pairing_q(const FormQ& u, const FormQ& v) {
    require_degree(u, 3, "Q");
    require_degree(v, 3, "Q");
    return -integrate(wedge(u, v));
}

GScalar pairing_h(const FormQ& u, const FormQ& v) {
    require_degree(u, 3, "H");
    require_degree(v, 3, "H");
    return -GScalar::i() * integrate(wedge(u, conj(v)));
}

GScalar integrate_torus(const FormQ& u, const ComplexStructure& J) {
    FormQ inframe = J.to_frame(u);
    for (const auto& [m, c] : inframe.coeffs()) {
        if (mask_degree(m) != 4) throw DegreeMismatch("torus integral expects 4-forms");
        if (m & ((1u << kGamma) | (1u << kGammaBar)))
            throw DegreeMismatch("torus integral expects forms from the base sub-algebra");
    }
    return inframe.coeff(Mask(0x1B));  // alpha^beta^conj(alpha)^conj(beta)
}

GScalar pairing_qb(const FormQ& u, const FormQ& v, const ComplexStructure& J) {
    require_degree(u, 2, "Q_B");
    require_degree(v, 2, "Q_B");
    return -integrate_torus(wedge(u, v), J);
}

GScalar pairing_hb(const FormQ& u, const FormQ& v, const ComplexStructure& J) {
    require_degree(u, 2, "H_B");
    require_degree(v, 2, "H_B");
    return integrate_torus(wedge(u, conj(v)), J);
}

GScalar pairing(PairingKind kind, const FormQ& u, const FormQ& v, const ComplexStructure& J) {
    switch (kind) {
        case PairingKind::Q: return pairing_q(u, v);
        case PairingKind::H: return pairing_h(u, v);
        case PairingKind::QB: return pairing_qb(u, v, J);
        case PairingKind::HB: return pairing_hb(u, v, J);
    }
    throw std::logic_error("unreachable");
}

std::vector<int> signature(PairingKind kind, const std::vector<FormQ>& basis,
                           const ComplexStructure& J) {
    size_t n = basis.size();
    Mat m = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = pairing(kind, basis[i], basis[j], J);
    bool diagonal = true;
    for (size_t i = 0; i < n && diagonal; ++i)
        for (size_t j = 0; j < n && diagonal; ++j)
            if (i != j && !m[i][j].is_zero()) diagonal = false;
    std::vector<int> signs;
    if (diagonal) {
        for (size_t i = 0; i < n; ++i) {
            const GScalar& dgn = m[i][i];
            if (dgn.im() != 0 || dgn.re() == 0)
                throw std::runtime_error("degenerate or non-real diagonal in signature");
            signs.push_back(dgn.re() > 0 ? 1 : -1);
        }
        return signs;
    }
    auto [minus, plus] = hermitian_signature(m);
    if (size_t(minus + plus) != n) throw std::runtime_error("degenerate pairing in signature");
    signs.assign(minus, -1);
    signs.insert(signs.end(), plus, 1);
    return signs;
}

StarSplit star_split(const Metric& m) {
    std::vector<FormQ> harm = laplacian_kernel(LaplacianKind::DeRham, 3, 0, m);
    const auto& basis3 = masks_of_degree(3);
    std::vector<Vec> hv;
    for (const FormQ& h : harm) hv.push_back(form_to_vec(h, basis3));
    Mat S = mat_zero(harm.size(), harm.size());
    for (size_t j = 0; j < harm.size(); ++j) {
        FormQ sh = m.hodge_star(harm[j]);
        auto coords = coordinates_in(form_to_vec(sh, basis3), hv);
        if (!coords)
            throw std::runtime_error("Hodge star does not preserve the harmonic 3-forms");
        for (size_t i = 0; i < harm.size(); ++i) S[i][j] = (*coords)[i];
    }
    auto eigenspace = [&](const GScalar& ev) {
        Mat a = S;
        for (size_t i = 0; i < a.size(); ++i) a[i][i] -= ev;
        std::vector<FormQ> out;
        for (const Vec& k : kernel_basis(a)) {
            FormQ f;
            for (size_t j = 0; j < harm.size(); ++j) f += k[j] * harm[j];
            out.push_back(f);
        }
        return out;
    };
    StarSplit split;
    split.plus = eigenspace(GScalar::i());
    split.minus = eigenspace(-GScalar::i());
    if (split.plus.size() + split.minus.size() != harm.size())
        throw std::runtime_error("star eigenspaces do not exhaust the harmonic 3-forms");
    return split;
}

std::array<FormQ, 5> default_eta_forms() {
    FormQ a = cov(kAlpha), b = cov(kBeta), g = cov(kGamma);
    FormQ ab = cov(kAlphaBar), bb = cov(kBetaBar), gb = cov(kGammaBar);
    const GScalar I = GScalar::i();
    FormQ abg = wedge(a, wedge(b, g));
    FormQ abg_bar = conj(abg);
    FormQ aa_bb = I * wedge(a, ab) + I * wedge(b, bb);      // i(a^ab + b^bb)
    FormQ aa_mm = I * wedge(a, ab) - I * wedge(b, bb);      // i(a^ab - b^bb)
    FormQ g_plus_gb = g + gb;
    std::array<FormQ, 5> eta;
    eta[0] = abg + wedge(aa_bb, g_plus_gb) + abg_bar;
    eta[1] = abg + abg_bar;
    eta[2] = wedge(aa_mm, g_plus_gb);
    eta[3] = wedge(a, wedge(bb, g)) + wedge(ab, wedge(b, gb));
    eta[4] = wedge(ab, wedge(b, g)) + wedge(a, wedge(bb, gb));
    return eta;
}

std::vector<FormQ> real_h3_basis() {
    FormQ a = cov(kAlpha), b = cov(kBeta), g = cov(kGamma);
    const GScalar I = GScalar::i();
    std::vector<FormQ> basis;
    FormQ abg = wedge(a, wedge(b, g));
    basis.push_back(abg + conj(abg));
    basis.push_back(I * (abg - conj(abg)));
    for (int x : {kAlpha, kBeta})
        for (int y : {kAlphaBar, kBetaBar}) {
            FormQ w = wedge(g, wedge(cov(x), cov(y)));
            basis.push_back(w + conj(w));
            basis.push_back(I * (w - conj(w)));
        }
    return basis;
}

SymplecticBasis symplectic_complete(const std::vector<FormQ>& etas) {
    if (etas.empty() || etas[0].is_zero())
        throw IsotropyError("symplectic completion needs a nonzero eta_0");
    for (const FormQ& e : etas) {
        if (!d(e).is_zero()) throw DegreeMismatch("eta classes must be d-closed");
        if (!(conj(e) == e)) throw IsotropyError("eta classes must be real");
    }
    for (size_t i = 0; i < etas.size(); ++i)
        for (size_t j = 0; j < etas.size(); ++j)
            if (!pairing_q(etas[i], etas[j]).is_zero())
                throw IsotropyError("eta family is not Q-isotropic");

    // Work in class coordinates over the 10-dimensional real basis.
    CohomologySpace h3 = de_rham(3);
    std::vector<FormQ> real_basis = real_h3_basis();
    std::vector<Vec> real_coords;
    for (const FormQ& r : real_basis) real_coords.push_back(*h3.class_coordinates(r));
    if (span_basis(real_coords).size() != 10)
        throw std::logic_error("real 3-class basis is degenerate");

    // Q in the real-class basis (real rational entries).
    size_t n = 10;
    Mat q = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) q[i][j] = pairing_q(real_basis[i], real_basis[j]);

    auto to_real_coords = [&](const FormQ& f) {
        auto cls = h3.class_coordinates(f);
        if (!cls) throw DegreeMismatch("form is not d-closed");
        auto coords = coordinates_in(*cls, span_basis(real_coords));
        // span_basis re-echelonizes; solve against the original instead
        coords = coordinates_in(*cls, real_coords);
        if (!coords) throw IsotropyError("class is not real");
        return *coords;
    };
    auto q_of = [&](const Vec& x, const Vec& y) {
        GScalar acc(0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!x[i].is_zero() && !y[j].is_zero()) acc += x[i] * y[j] * q[i][j];
        return acc;
    };
    auto from_coords = [&](const Vec& x) {
        FormQ f;
        for (size_t i = 0; i < n; ++i) f += x[i] * real_basis[i];
        return f;
    };

    std::vector<Vec> eta_c;
    for (const FormQ& e : etas) eta_c.push_back(to_real_coords(e));

    // Extend the eta family to five independent isotropic vectors.
    std::vector<Vec> candidates;
    for (size_t i = 0; i < n; ++i) {
        Vec v(n, GScalar(0));
        v[i] = GScalar(1);
        candidates.push_back(v);
    }
    // Partial dual vectors are needed to reduce candidates; build pairs greedily.
    std::vector<Vec> nu_c;
    auto build_nu = [&]() {
        nu_c.clear();
        for (size_t j = 0; j < eta_c.size(); ++j) {
            // Solve Q(eta_i, nu_j) = delta_ij.
            Mat sys = mat_zero(eta_c.size(), n);
            Vec rhs(eta_c.size(), GScalar(0));
            for (size_t i = 0; i < eta_c.size(); ++i) {
                for (size_t cidx = 0; cidx < n; ++cidx) {
                    Vec unit(n, GScalar(0));
                    unit[cidx] = GScalar(1);
                    sys[i][cidx] = q_of(eta_c[i], unit);
                }
                rhs[i] = (i == j) ? GScalar(1) : GScalar(0);
            }
            auto sol = solve(sys, rhs);
            if (!sol) throw IsotropyError("cannot complete eta family symplectically");
            nu_c.push_back(*sol);
        }
        // Make the nu family isotropic without disturbing Q(eta_i, nu_j).
        for (size_t j = 0; j < nu_c.size(); ++j)
            for (size_t k = 0; k < j; ++k) {
                GScalar c = q_of(nu_c[k], nu_c[j]);
                for (size_t i = 0; i < n; ++i) nu_c[j][i] += c * eta_c[k][i];
            }
    };

    while (eta_c.size() < 5) {
        build_nu();
        bool extended = false;
        for (const Vec& cand : candidates) {
            // Reduce against the existing pairs, then check independence.
            Vec w = cand;
            for (size_t jj = 0; jj < eta_c.size(); ++jj) {
                GScalar ce = q_of(w, nu_c[jj]);
                GScalar cn = q_of(eta_c[jj], w);
                for (size_t i = 0; i < n; ++i) w[i] -= ce * eta_c[jj][i] + cn * nu_c[jj][i];
            }
            std::vector<Vec> test = eta_c;
            test.push_back(w);
            if (span_basis(test).size() == eta_c.size() + 1) {
                eta_c.push_back(w);
                extended = true;
                break;
            }
        }
        if (!extended) throw IsotropyError("failed to extend eta family to a Lagrangian");
    }
    build_nu();

    SymplecticBasis out;
    for (const Vec& e : eta_c) out.eta.push_back(from_coords(e));
    for (const Vec& v : nu_c) out.nu.push_back(from_coords(v));
    // All relations re-verified exactly.
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) {
            if (!pairing_q(out.eta[i], out.eta[j]).is_zero() ||
                !pairing_q(out.nu[i], out.nu[j]).is_zero())
                throw std::logic_error("symplectic completion: isotropy violated");
            GScalar qij = pairing_q(out.eta[i], out.nu[j]);
            if (qij != (i == j ? GScalar(1) : GScalar(0)))
                throw std::logic_error("symplectic completion: duality violated");
        }
    for (const FormQ& f : out.nu)
        if (!(conj(f) == f)) throw std::logic_error("symplectic completion: nu not real");
    return out;
}

namespace {

const SymplecticBasis& default_symplectic_basis() {
    static const SymplecticBasis basis = [] {
        auto etas = default_eta_forms();
        return symplectic_complete({etas.begin(), etas.end()});
    }();
    return basis;
}

}  // namespace

FormQ holomorphic_volume(const ComplexStructure& J) {
    return wedge(J.frame_covector(0), wedge(J.frame_covector(1), J.frame_covector(2)));
}

std::array<GScalar, 4> coordinates_z(const ParamPoint& t) {
    if (!t.on_essential_slice())
        throw WrongClass("coordinates are defined on the essential slice t31 = t32 = 0");
    const SymplecticBasis& sb = default_symplectic_basis();
    ComplexStructure J(t);
    FormQ u = holomorphic_volume(J);
    GScalar norm = pairing_q(u, sb.eta[0]);
    if (norm.is_zero()) throw NormalizationPole("Q(u_t, eta_0) = 0");
    std::array<GScalar, 4> z;
    for (int i = 1; i <= 4; ++i) z[i - 1] = pairing_q(u, sb.eta[i]) / norm;
    return z;
}

std::array<GScalar, 4> coordinates_z_closed(const ParamPoint& t) {
    const GScalar one(1), I = GScalar::i();
    GScalar t11 = t.t_at(1, 1), t12 = t.t_at(1, 2), t21 = t.t_at(2, 1), t22 = t.t_at(2, 2);
    GScalar D = t.det();
    GScalar N = I * (one + D * D) + (t21 - t12) * (one + D);
    if (N.is_zero()) throw NormalizationPole("Q(u_t, eta_0) = 0");
    return {I * (one + D * D) / N, -(t12 + t21) * (one + D) / N, -I * (t11 * D + t22) / N,
            -I * (t22 * D + t11) / N};
}

FormQ eta0_torus() {
    FormQ a = cov(kAlpha), b = cov(kBeta);
    const GScalar I = GScalar::i();
    return wedge(a, b) + I * wedge(a, cov(kAlphaBar)) + I * wedge(b, cov(kBetaBar)) +
           wedge(cov(kAlphaBar), cov(kBetaBar));
}

namespace {

// Deterministic completion of eta_{0,B}: four real 2-classes on the torus that
// make t |-> w(t) a chart near 0 (the paper's "symplectic" completion is not
// dimensionally meaningful on the 6-dimensional H^2(B), so a fixed choice with
// verified injectivity is used instead).
std::array<FormQ, 4> eta_torus_tail() {
    FormQ a = cov(kAlpha), b = cov(kBeta), ab = cov(kAlphaBar), bb = cov(kBetaBar);
    const GScalar I = GScalar::i();
    std::array<FormQ, 4> out;
    out[0] = wedge(a, b) + wedge(ab, bb);
    out[1] = I * wedge(a, ab);
    out[2] = wedge(a, bb) - wedge(b, ab);
    out[3] = I * (wedge(a, bb) + wedge(b, ab));
    return out;
}

}  // namespace

std::array<GScalar, 4> coordinates_w(const ParamPoint& t) {
    if (!t.on_essential_slice())
        throw WrongClass("coordinates are defined on the essential slice t31 = t32 = 0");
    ComplexStructure J(t), J0(ParamPoint::zero());
    FormQ v = wedge(J.frame_covector(0), J.frame_covector(1));
    GScalar norm = pairing_qb(v, eta0_torus(), J0);
    if (norm.is_zero()) throw NormalizationPole("Q_B(v_t, eta_{0,B}) = 0");
    auto tail = eta_torus_tail();
    std::array<GScalar, 4> w;
    for (int i = 0; i < 4; ++i) w[i] = pairing_qb(v, tail[i], J0) / norm;
    return w;
}

GScalar yukawa(const TValued01& th1, const TValued01& th2, const TValued01& th3,
               const FormQ& u) {
    for (const auto& [m, c] : u.coeffs())
        if (m != Mask(0x07))
            throw DegreeMismatch("yukawa expects a (3,0) form in the fixed frame");
    GScalar s = u.coeff(Mask(0x07));  // (xi_1 ^ xi_2 ^ xi_3) -| u
    static const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                                     {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                                     {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
    GScalar acc(0);
    for (int j1 = 0; j1 < 3; ++j1)
        for (int w1 = 0; w1 < 3; ++w1) {
            if (th1.coeff[j1][w1].is_zero()) continue;
            for (int j2 = 0; j2 < 3; ++j2)
                for (int w2 = 0; w2 < 3; ++w2) {
                    if (th2.coeff[j2][w2].is_zero()) continue;
                    for (int j3 = 0; j3 < 3; ++j3)
                        for (int w3 = 0; w3 < 3; ++w3) {
                            if (th3.coeff[j3][w3].is_zero()) continue;
                            int e = eps[j1][j2][j3];
                            if (e == 0) continue;
                            FormQ wbar =
                                wedge(cov(w1 + 3), wedge(cov(w2 + 3), cov(w3 + 3)));
                            if (wbar.is_zero()) continue;
                            GScalar val = integrate(wedge(u, wbar));
                            acc += th1.coeff[j1][w1] * th2.coeff[j2][w2] *
                                   th3.coeff[j3][w3] * GScalar(e) * s * val;
                        }
                }
        }
    return acc;
}

namespace {

// Jets of the normalized section u'_t and of the coordinates z at a point.
struct VolumeJets {
    FormJ u_normalized;
    std::array<Jet1, 4> z;    // against eta_1..eta_4
    std::array<Jet1, 4> psi;  // against nu_1..nu_4
};

Jet1 pairing_q_jet(const FormJ& u, const FormQ& v) {
    return Jet1(-GScalar(1)) * integrate(wedge(u, promote_jet(v)));
}

VolumeJets volume_jets(const ParamPoint& t) {
    const SymplecticBasis& sb = default_symplectic_basis();
    std::array<FormR, 3> fr;
    for (int j = 0; j < 3; ++j) fr[j] = promote<RatFunc, MultiPoly>(frame_covector_symbolic(j));
    FormR u_sym = wedge(fr[0], wedge(fr[1], fr[2]));
    FormJ u = eval_jet(u_sym, t);
    Jet1 norm = pairing_q_jet(u, sb.eta[0]);
    if (norm.value.is_zero()) throw NormalizationPole("Q(u_t, eta_0) = 0");
    FormJ up;
    Jet1 inv = Jet1(GScalar(1)) / norm;
    for (const auto& [m, c] : u.coeffs()) up.add(m, inv * c);
    VolumeJets out;
    out.u_normalized = up;
    for (int i = 1; i <= 4; ++i) out.z[i - 1] = pairing_q_jet(up, sb.eta[i]);
    for (int i = 1; i <= 4; ++i) out.psi[i - 1] = pairing_q_jet(up, sb.nu[i]);
    return out;
}

}  // namespace

PotentialSymmetryReport potential_symmetry_check(const ParamPoint& t) {
    if (!t.on_essential_slice())
        throw WrongClass("potential symmetry is checked on the essential slice");
    VolumeJets vj = volume_jets(t);
    PotentialSymmetryReport report;
    report.holomorphic = true;
    for (int i = 0; i < 4; ++i)
        for (int k = 6; k < 12; ++k)
            if (!vj.z[i].partials[k].is_zero() || !vj.psi[i].partials[k].is_zero())
                report.holomorphic = false;
    // Holomorphic t-slots 0..3 = (t11, t12, t21, t22).
    Mat J = mat_zero(4, 4), P = mat_zero(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 4; ++a) {
            J[i][a] = vj.z[i].partials[a];
            P[i][a] = vj.psi[i].partials[a];
        }
    report.z_jacobian = J;
    try {
        inverse(J);
        report.jacobian_invertible = true;
    } catch (const FrameSingular&) {
        throw JacobianSingular("dz/dt is singular at the given point");
    }
    // dPsi_i/dz_j symmetric  <=>  J^T P = P^T J.
    Mat lhs = mat_mul(mat_transpose(J), P);
    Mat rhs = mat_mul(mat_transpose(P), J);
    report.asymmetry = mat_zero(4, 4);
    report.symmetric = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            report.asymmetry[i][j] = lhs[i][j] - rhs[i][j];
            if (!report.asymmetry[i][j].is_zero()) report.symmetric = false;
        }
    return report;
}

mpq_class yukawa_cross_oracle_max_error(const mpq_class& step) {
    // Jacobian of z at 0 and the first-order chart t_lin(zeta) = J^{-1} zeta.
    VolumeJets vj0 = volume_jets(ParamPoint::zero());
    Mat J = mat_zero(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 4; ++a) J[i][a] = vj0.z[i].partials[a];
    Mat Jinv = inverse(J);

    const SymplecticBasis& sb = default_symplectic_basis();
    auto u_normalized_at = [&](const std::array<GScalar, 4>& zeta) {
        ParamPoint t;
        for (int a = 0; a < 4; ++a) {
            GScalar acc(0);
            for (int i = 0; i < 4; ++i) acc += Jinv[a][i] * zeta[i];
            t.t[a] = acc;
        }
        ComplexStructure Jt(t);
        FormQ u = holomorphic_volume(Jt);
        GScalar norm = pairing_q(u, sb.eta[0]);
        if (norm.is_zero()) throw NormalizationPole("Q(u_t, eta_0) = 0 on the grid");
        return (GScalar(1) / norm) * u;
    };

    GScalar h{mpq_class(step)};
    auto grid_point = [&](int i, int si, int j, int sj) {
        std::array<GScalar, 4> zeta{GScalar(0), GScalar(0), GScalar(0), GScalar(0)};
        if (i >= 0) zeta[i] += GScalar(si) * h;
        if (j >= 0) zeta[j] += GScalar(sj) * h;
        return u_normalized_at(zeta);
    };

    FormQ g0 = grid_point(-1, 0, -1, 0);
    std::array<FormQ, 4> dplus, dminus;
    for (int k = 0; k < 4; ++k) {
        dplus[k] = grid_point(k, +1, -1, 0);
        dminus[k] = grid_point(k, -1, -1, 0);
    }
    auto first_deriv = [&](int k) {
        return (GScalar(1) / (GScalar(2) * h)) * (dplus[k] - dminus[k]);
    };
    auto second_deriv = [&](int i, int j) {
        if (i == j) {
            FormQ num = dplus[i] - g0 - g0 + dminus[i];
            return (GScalar(1) / (h * h)) * num;
        }
        FormQ num = grid_point(i, +1, j, +1) - grid_point(i, +1, j, -1) -
                    grid_point(i, -1, j, +1) + grid_point(i, -1, j, -1);
        return (GScalar(1) / (GScalar(4) * h * h)) * num;
    };

    // Exact left side: Y2 in z-directions through the inverse Jacobian.
    const int theta_map[4][2] = {{0, 3}, {0, 4}, {1, 3}, {1, 4}};  // t_a -> xi_j (x) cov w
    auto theta_for_z = [&](int i) {
        TValued01 th;
        for (int a = 0; a < 4; ++a) {
            const GScalar& c = Jinv[a][i];
            if (!c.is_zero())
                th = th.plus(TValued01::generator(theta_map[a][0], theta_map[a][1]).scaled(c));
        }
        return th;
    };
    FormQ u0 = g0;

    mpq_class worst(0);
    auto abs_bound = [](const GScalar& z) {
        mpq_class re = z.re() >= 0 ? z.re() : mpq_class(-z.re());
        mpq_class im = z.im() >= 0 ? z.im() : mpq_class(-z.im());
        return re > im ? re : im;
    };
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            FormQ d2 = second_deriv(i, j);
            for (int k = 0; k < 4; ++k) {
                GScalar lhs = yukawa(theta_for_z(i), theta_for_z(j), theta_for_z(k), u0);
                GScalar rhs = -pairing_q(first_deriv(k), d2);
                mpq_class dev = abs_bound(lhs - rhs);
                if (dev > worst) worst = dev;
            }
        }
    return worst;
}

std::array<FormQ, 4> aeppli_22_basis_forms(const ComplexStructure& J) {
    const GScalar I = GScalar::i();
    FormQ a = J.frame_covector(0), b = J.frame_covector(1), g = J.frame_covector(2);
    FormQ ab = J.frame_covector(3), bb = J.frame_covector(4), gb = J.frame_covector(5);
    FormQ igg = I * wedge(g, gb);
    std::array<FormQ, 4> out;
    out[0] = wedge(I * wedge(a, ab), igg);
    out[1] = wedge(I * wedge(b, bb), igg);
    out[2] = wedge(I * wedge(a, bb), igg);
    out[3] = wedge(I * wedge(b, ab), igg);
    return out;
}

namespace {

// Coordinates of the Aeppli class of u in the four-class basis.
std::array<GScalar, 4> aeppli_coords_in_basis(const FormQ& u, const ComplexStructure& J) {
    CohomologySpace ae = aeppli(2, 2, J);
    auto basis = aeppli_22_basis_forms(J);
    Mat cols = mat_zero(ae.dimension(), 4);
    for (int j = 0; j < 4; ++j) {
        auto c = ae.class_coordinates(basis[j]);
        if (!c) throw std::logic_error("basis form is not an Aeppli cycle");
        for (size_t i = 0; i < ae.dimension(); ++i) cols[i][j] = (*c)[i];
    }
    auto target = ae.class_coordinates(u);
    if (!target) throw DegreeMismatch("form is not an Aeppli cycle");
    auto sol = solve(cols, *target);
    if (!sol) throw std::logic_error("Aeppli class outside the four-class basis span");
    return {(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]};
}

}  // namespace

MirrorImage mirror_map_positive(const ParamPoint& t) {
    if (!t.on_essential_slice())
        throw WrongClass("the positive mirror map is defined on the essential slice");
    Metric m = Metric::omega11_on_x0(t);  // throws NotPositive outside the domain
    FormQ w2 = wedge(m.metric_form(), m.metric_form());
    MirrorImage img;
    img.coeffs = aeppli_coords_in_basis(w2, m.structure());
    img.marked = img.coeffs == std::array<GScalar, 4>{GScalar(2), GScalar(2), GScalar(0),
                                                      GScalar(0)};
    return img;
}

std::array<GScalar, 4> mirror_map_positive_closed(const ParamPoint& t) {
    const GScalar one(1), two(2);
    GScalar t11 = t.t_at(1, 1), t12 = t.t_at(1, 2), t21 = t.t_at(2, 1), t22 = t.t_at(2, 2);
    GScalar dd = GScalar(t.det().norm());
    return {two * (one - GScalar(t11.norm()) - GScalar(t21.norm())) * (one - dd),
            two * (one - GScalar(t12.norm()) - GScalar(t22.norm())) * (one - dd),
            -two * (t12 * t11.conj() + t22 * t21.conj()) * (one - dd),
            -two * (t11 * t12.conj() + t21 * t22.conj()) * (one - dd)};
}

MirrorImage mirror_map_complexified(const ParamPoint& t) {
    if (!t.on_essential_slice())
        throw WrongClass("the mirror map is defined on the essential slice");
    GScalar t11 = t.t_at(1, 1), t12 = t.t_at(1, 2), t21 = t.t_at(2, 1), t22 = t.t_at(2, 2);
    MirrorImage img;
    img.coeffs = {GScalar(2) + t21, GScalar(2) - t12, t22, -t11};
    img.marked = t11.is_zero() && t12.is_zero() && t21.is_zero() && t22.is_zero();
    return img;
}

Mat iso_A_matrix(const ComplexStructure& J) {
    // Domain basis [Gamma_1(t)..Gamma_4(t)], target the four-class Aeppli basis
    // ordered as (a g ab gb, a g bb gb, b g ab gb, b g bb gb); the map is
    // [Gamma] -> [Gamma ^ conj(gamma_t)]_A.
    auto gammas = gamma_forms(J);
    FormQ gbar = J.frame_covector(5);
    // Reorder the i-weighted basis to the display order of the target classes.
    auto f = aeppli_22_basis_forms(J);
    std::array<FormQ, 4> display{f[0], f[2], f[3], f[1]};
    CohomologySpace ae = aeppli(2, 2, J);
    Mat cols = mat_zero(ae.dimension(), 4);
    for (int j = 0; j < 4; ++j) {
        auto c = ae.class_coordinates(display[j]);
        for (size_t i = 0; i < ae.dimension(); ++i) cols[i][j] = (*c)[i];
    }
    Mat out = mat_zero(4, 4);
    for (int j = 0; j < 4; ++j) {
        auto c = ae.class_coordinates(wedge(gammas[j], gbar));
        if (!c) throw std::logic_error("Gamma ^ conj(gamma_t) is not an Aeppli cycle");
        auto sol = solve(cols, *c);
        if (!sol) throw std::logic_error("A_t image outside the Aeppli basis span");
        for (int i = 0; i < 4; ++i) out[i][j] = (*sol)[i];
    }
    return out;
}

Mat mirror_differential_at_zero() {
    // Columns: d/dt11, d/dt12, d/dt21, d/dt22 of the complexified map in the
    // four-class basis (i a ab gg, i b bb gg, i a bb gg, i b ab gg).
    Mat m = mat_zero(4, 4);
    m[3][0] = GScalar(-1);
    m[1][1] = GScalar(-1);
    m[0][2] = GScalar(1);
    m[2][3] = GScalar(1);
    return m;
}

Mat lift_I_matrix(const ComplexStructure& J, const Metric& m) {
    CohomologySpace h4 = de_rham(4);
    auto basis = aeppli_22_basis_forms(J);
    Mat out = mat_zero(h4.dimension(), 4);
    for (int j = 0; j < 4; ++j) {
        FormQ lifted = gauduchon_lift(basis[j], m);
        auto c = h4.class_coordinates(lifted);
        if (!c) throw ClosednessFailure("lifted form is not d-closed");
        for (size_t i = 0; i < h4.dimension(); ++i) out[i][j] = (*c)[i];
    }
    if (rank(out) != 4) throw std::runtime_error("sGG lift is not injective");
    return out;
}

Mat bc31_to_aeppli(const ComplexStructure& J) {
    CohomologySpace bc = bott_chern(3, 1, J);
    if (bc.dimension() != 2) throw std::runtime_error("H^{3,1}_BC is not 2-dimensional");
    FormQ a = J.frame_covector(0), b = J.frame_covector(1), g = J.frame_covector(2);
    FormQ abg = wedge(a, wedge(b, g));
    std::array<FormQ, 2> gen{wedge(abg, J.frame_covector(3)), wedge(abg, J.frame_covector(4))};
    // Express the computed BC basis through the two display generators.
    Mat gen_cols = mat_zero(bc.dimension(), 2);
    for (int j = 0; j < 2; ++j) {
        auto c = bc.class_coordinates(gen[j]);
        if (!c) throw std::logic_error("display generator is not a BC cycle");
        for (size_t i = 0; i < bc.dimension(); ++i) gen_cols[i][j] = (*c)[i];
    }
    if (rank(gen_cols) != 2)
        throw std::runtime_error("display generators do not span H^{3,1}_BC");
    // Images [a ab g gb]_A and [b bb g gb]_A in the four-class basis.
    FormQ img0 = wedge(wedge(a, J.frame_covector(3)), wedge(g, J.frame_covector(5)));
    FormQ img1 = wedge(wedge(b, J.frame_covector(4)), wedge(g, J.frame_covector(5)));
    Mat out = mat_zero(4, 2);
    auto c0 = aeppli_coords_in_basis(img0, J);
    auto c1 = aeppli_coords_in_basis(img1, J);
    for (int i = 0; i < 4; ++i) {
        out[i][0] = c0[i];
        out[i][1] = c1[i];
    }
    if (rank(out) != 2) throw std::runtime_error("BC(3,1) -> Aeppli map is not injective");
    return out;
}

VhsReport vhs_checks() {
    VhsReport report;
    ComplexStructure J0(ParamPoint::zero());
    FormQ abg = wedge(cov(kAlpha), wedge(cov(kBeta), cov(kGamma)));

    // (1) Transversality at 0: contraction by the essential Kodaira-Spencer
    // directions keeps F^3 inside F^2 and H21 inside H21 + H12.
    const int gens[4][2] = {{0, 3}, {0, 4}, {1, 3}, {1, 4}};
    CohomologySpace h21 = essential_space(J0);
    CohomologySpace dol12 = dolbeault(1, 2, J0);
    bool trans = true;
    auto gammas0 = gamma_forms(J0);
    for (auto [j, w] : gens) {
        TValued01 theta = TValued01::generator(j, w);
        FormQ into = cy_isomorphism(theta, abg);
        if (!h21.contains_cycle(into)) trans = false;
        for (const FormQ& g : gammas0) {
            FormQ c = cy_isomorphism(theta, g);
            if (!c.is_zero() && !dol12.is_zero_class(c)) trans = false;
        }
    }
    report.transversality = trans;

    // (2) F^2 holomorphicity: anti-holomorphic first derivatives of Gamma_j at 0.
    auto gsym = gamma_forms_symbolic();
    bool f2 = true;
    const int expected_slot[4] = {s_index(1, 2), s_index(2, 2), s_index(1, 1), s_index(2, 1)};
    const int expected_sign[4] = {-1, -1, 1, 1};
    for (int j = 0; j < 4; ++j) {
        FormJ jet = eval_jet(gsym[j], ParamPoint::zero());
        for (int k = 6; k < 12; ++k) {
            FormQ deriv = jet_partial(jet, k);
            FormQ expected =
                (k == expected_slot[j]) ? GScalar(expected_sign[j]) * abg : FormQ();
            if (!(deriv == expected)) f2 = false;
        }
    }
    report.f2_holomorphic = f2;
    report.witnesses.push_back("d[Gamma_1]/ds12(0) = " + form_str(jet_partial(
                                   eval_jet(gsym[0], ParamPoint::zero()), s_index(1, 2))));

    // (3) Non-holomorphicity witness for H^{1,2}:
    // delbar_0 of d(conj(star_t Gamma_1))/ds21 at 0 must be nonzero.
    {
        const SigmaSymbolic& s = sigma_appendix_symbolic();
        RatFunc qratio = s.s22b / s.s12.conj();
        std::array<FormR, 6> fr;
        for (int j = 0; j < 6; ++j)
            fr[j] = promote<RatFunc, MultiPoly>(frame_covector_symbolic(j));
        const RatFunc mi{-GScalar::i()};
        FormR star_gamma1 = mi * wedge(fr[1], wedge(fr[2], fr[4])) +
                            (mi * qratio) * wedge(fr[0], wedge(fr[1], fr[5]));
        FormR witness_sym = conj(star_gamma1);
        FormJ jet = eval_jet(witness_sym, ParamPoint::zero());
        FormQ deriv = jet_partial(jet, s_index(2, 1));
        FormQ obstruction = J0.delbar(deriv);
        report.h12_nonholomorphic_witness = !obstruction.is_zero();
        report.witnesses.push_back("delbar_0 d(conj(star_t Gamma_1))/ds21|0 = " +
                                   form_str(obstruction));
    }

    // (4) F_G holomorphicity: anti-holomorphic derivatives of the Aeppli
    // generators stay within span{a b g gb, a b g ab, a b g bb}.
    {
        std::array<Form<MultiPoly>, 6> fs;
        for (int j = 0; j < 6; ++j) fs[j] = frame_covector_symbolic(j);
        std::array<Form<MultiPoly>, 4> gens4;
        gens4[0] = wedge(fs[0], wedge(fs[2], wedge(fs[3], fs[5])));
        gens4[1] = wedge(fs[0], wedge(fs[2], wedge(fs[4], fs[5])));
        gens4[2] = wedge(fs[1], wedge(fs[2], wedge(fs[3], fs[5])));
        gens4[3] = wedge(fs[1], wedge(fs[2], wedge(fs[4], fs[5])));
        FormQ w_gb = wedge(abg, cov(kGammaBar));
        FormQ w_ab = wedge(abg, cov(kAlphaBar));
        FormQ w_bb = wedge(abg, cov(kBetaBar));
        std::vector<Vec> span_vecs;
        const auto& basis4 = masks_of_degree(4);
        for (const FormQ* f : {&w_gb, &w_ab, &w_bb})
            span_vecs.push_back(form_to_vec(*f, basis4));
        bool fg = true;
        for (int j = 0; j < 4; ++j) {
            FormJ jet = eval_jet(promote<RatFunc, MultiPoly>(gens4[j]), ParamPoint::zero());
            for (int k = 6; k < 12; ++k) {
                FormQ deriv = jet_partial(jet, k);
                if (deriv.is_zero()) continue;
                if (!in_span(form_to_vec(deriv, basis4), span_vecs)) fg = false;
            }
        }
        // Pinned examples from the first-derivative computation.
        FormJ jet0 = eval_jet(promote<RatFunc, MultiPoly>(gens4[0]), ParamPoint::zero());
        if (!(jet_partial(jet0, s_index(1, 2)) == -w_gb)) fg = false;
        if (!(jet_partial(jet0, s_index(3, 2)) == w_ab)) fg = false;
        report.fg_holomorphic = fg;
        report.witnesses.push_back("d(a g ab gb)/ds12(0) = " +
                                   form_str(jet_partial(jet0, s_index(1, 2))));
    }
    return report;
}

}  // namespace iwa
