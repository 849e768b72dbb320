#include "iwa/hodge.hpp"

#include <cassert>

namespace iwa {

namespace {

void check_positive_definite(const Mat& h) {
    // Hermitian with positive leading principal minors, all exact.
    if (!is_hermitian(h)) throw NotPositive("metric gram matrix is not Hermitian");
    for (size_t k = 1; k <= h.size(); ++k) {
        Mat minor(k, Vec(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) minor[i][j] = h[i][j];
        GScalar det = mat_det(minor);
        if (det.im() != 0 || det.re() <= 0)
            throw NotPositive("metric gram matrix is not positive definite");
    }
}

Mask barswap(Mask m) { return Mask(((m & 0x07) << 3) | ((m & 0x38) >> 3)); }

int conj_sign(Mask m) {
    static const int swap_bar[6] = {3, 4, 5, 0, 1, 2};
    return permuted_sign(m, swap_bar);
}

}  // namespace

Metric::Metric(ComplexStructure J, Mat gram3) : J_(std::move(J)), H_(std::move(gram3)) {
    check_positive_definite(H_);
    detH_ = mat_det(H_);
    // Covector gram: G = (H^{-1})^T on the (1,0) side, conjugate on the (0,1) side.
    Mat G = mat_transpose(inverse(H_));
    G6_ = mat_zero(6, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            G6_[i][j] = G[i][j];
            G6_[i + 3][j + 3] = G[i][j].conj();
        }
}

Metric Metric::canonical(const ComplexStructure& J) { return Metric(J, mat_identity(3)); }

Metric Metric::omega11_on_x0(const ParamPoint& t) {
    Mat h = mat_identity(3);
    h[0][0] = GScalar(1) + c1_of(t);
    h[1][1] = GScalar(1) + c2_of(t);
    h[2][2] = GScalar(1) + c3_of(t);
    h[0][1] = d_of(t);
    h[1][0] = d_of(t).conj();
    return Metric(ComplexStructure(ParamPoint::zero()), std::move(h));
}

FormQ Metric::metric_form() const {
    FormQ w;
    const GScalar I = GScalar::i();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (H_[i][j].is_zero()) continue;
            w += (I * H_[i][j]) * wedge(J_.frame_covector(i), J_.frame_covector(j + 3));
        }
    return w;
}

GScalar Metric::volume_scale() const { return detH_; }

GScalar Metric::mono_inner(Mask a, Mask b) const {
    if (mask_degree(a) != mask_degree(b)) return GScalar(0);
    int k = mask_degree(a);
    if (k == 0) return GScalar(1);
    std::vector<int> ia, ib;
    for (int i = 0; i < 6; ++i) {
        if (a & (1u << i)) ia.push_back(i);
        if (b & (1u << i)) ib.push_back(i);
    }
    Mat g(k, Vec(k));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) g[r][c] = G6_[ia[r]][ib[c]];
    return mat_det(g);
}

const Mat& Metric::gram_matrix(int degree) const {
    auto it = mono_gram_.find(degree);
    if (it != mono_gram_.end()) return it->second;
    const auto& basis = masks_of_degree(degree);
    Mat m = mat_zero(basis.size(), basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) m[i][j] = mono_inner(basis[i], basis[j]);
    return mono_gram_.emplace(degree, std::move(m)).first->second;
}

GScalar Metric::inner(const FormQ& u, const FormQ& v) const {
    FormQ uf = J_.to_frame(u), vf = J_.to_frame(v);
    GScalar acc(0);
    for (const auto& [ma, ca] : uf.coeffs())
        for (const auto& [mb, cb] : vf.coeffs()) {
            GScalar g = mono_inner(ma, mb);
            if (!g.is_zero()) acc += ca * cb.conj() * g;
        }
    return acc;
}

FormQ Metric::hodge_star(const FormQ& u) const {
    // u ^ conj(star v) = <u,v> dV with dV = det(H) i e_top in frame coordinates.
    // For each source monomial e_I the only contributing target is
    // K = barswap(complement(I)).
    FormQ uf = J_.to_frame(u);
    FormQ out;
    const auto& all = uf.coeffs();
    if (all.empty()) return out;
    int k = -1;
    for (const auto& [m, c] : all) {
        if (k < 0) k = mask_degree(m);
        if (mask_degree(m) != k) throw DegreeMismatch("hodge_star expects a homogeneous form");
    }
    for (Mask I : masks_of_degree(k)) {
        GScalar g(0);
        for (const auto& [mb, cb] : all) {
            GScalar gi = mono_inner(I, mb);
            if (!gi.is_zero()) g += cb.conj() * gi;  // <e_I, v> with v = sum cb e_mb
        }
        if (g.is_zero()) continue;
        Mask comp = Mask(kTopMask & ~I);
        Mask K = barswap(comp);
        int s = conj_sign(K) * merge_sign(I, comp);
        // conj(s_K) * s = <e_I, v> * det(H) * i
        GScalar sK = (g * detH_ * GScalar::i() / GScalar(s)).conj();
        out.add(K, sK);
    }
    return J_.from_frame(out);
}

Mat op_matrix_degree(const ComplexStructure& J, FormOp op, int degree) {
    const auto& src = masks_of_degree(degree);
    const auto& dst = masks_of_degree(degree + 1 > 6 ? 6 : degree + 1);
    Mat m = mat_zero(degree >= 6 ? 0 : dst.size(), src.size());
    if (degree >= 6) return m;
    for (size_t j = 0; j < src.size(); ++j) {
        FormQ image = J.to_frame(d(J.from_frame(FormQ::monomial(src[j], GScalar(1)))));
        for (size_t i = 0; i < dst.size(); ++i) {
            Mask t = dst[i];
            bool keep = true;
            if (op == FormOp::Del) keep = mask_p(t) == mask_p(src[j]) + 1;
            if (op == FormOp::DelBar) keep = mask_q(t) == mask_q(src[j]) + 1;
            m[i][j] = keep ? image.coeff(t) : GScalar(0);
        }
    }
    return m;
}

namespace {

// Adjoint of T: deg a -> deg b w.r.t. the metric grams: T* = (Ma^T)^{-1} T^H Mb^T.
Mat adjoint_matrix(const Mat& T, const Mat& Ma, const Mat& Mb) {
    if (T.empty() || T[0].empty()) return mat_zero(T.empty() ? 0 : T[0].size(), T.size());
    Mat left = inverse(mat_transpose(Ma));
    return mat_mul(left, mat_mul(mat_conj_transpose(T), mat_transpose(Mb)));
}

Vec to_frame_vec(const ComplexStructure& J, const FormQ& u, int degree) {
    return form_to_vec(J.to_frame(u), masks_of_degree(degree));
}

FormQ from_frame_vec(const ComplexStructure& J, const Vec& v, int degree) {
    return J.from_frame(vec_to_form(v, masks_of_degree(degree)));
}

}  // namespace

FormQ adjoint(FormOp op, const FormQ& u, const Metric& m) {
    if (u.is_zero()) return {};
    int k = 0;
    if (!u.is_homogeneous(&k)) throw DegreeMismatch("adjoint expects a homogeneous form");
    if (k == 0) return {};
    const ComplexStructure& J = m.structure();
    Mat T = op_matrix_degree(J, op, k - 1);
    Mat Tstar = adjoint_matrix(T, m.gram_matrix(k - 1), m.gram_matrix(k));
    return from_frame_vec(J, mat_apply(Tstar, to_frame_vec(J, u, k)), k - 1);
}

std::vector<FormQ> laplacian_kernel(LaplacianKind kind, int p_or_k, int q, const Metric& m) {
    const ComplexStructure& J = m.structure();
    int k = (kind == LaplacianKind::DeRham) ? p_or_k : p_or_k + q;
    const auto& degree_masks = masks_of_degree(k);

    // Restrict to the (p,q) frame-bidegree subspace except for the d-Laplacian.
    std::vector<size_t> cols;
    for (size_t i = 0; i < degree_masks.size(); ++i) {
        Mask mm = degree_masks[i];
        if (kind == LaplacianKind::DeRham || (mask_p(mm) == p_or_k && mask_q(mm) == q))
            cols.push_back(i);
    }

    auto restrict_cols = [&](const Mat& a) {
        if (a.empty()) return mat_zero(0, cols.size());
        Mat r = mat_zero(a.size(), cols.size());
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) r[i][j] = a[i][cols[j]];
        return r;
    };

    std::vector<Mat> conditions;
    auto add_op_and_adjoint = [&](FormOp op) {
        Mat T = op_matrix_degree(J, op, k);
        conditions.push_back(restrict_cols(T));
        if (k > 0) {
            Mat Tdown = op_matrix_degree(J, op, k - 1);
            conditions.push_back(
                restrict_cols(adjoint_matrix(Tdown, m.gram_matrix(k - 1), m.gram_matrix(k))));
        }
    };

    switch (kind) {
        case LaplacianKind::DeRham:
            add_op_and_adjoint(FormOp::D);
            break;
        case LaplacianKind::Del:
            add_op_and_adjoint(FormOp::Del);
            break;
        case LaplacianKind::DelBar:
            add_op_and_adjoint(FormOp::DelBar);
            break;
        case LaplacianKind::Aeppli: {
            // ker(del delbar) cap ker del* cap ker delbar*
            if (k + 1 < 6) {
                Mat deldelbar = mat_mul(op_matrix_degree(J, FormOp::Del, k + 1),
                                        op_matrix_degree(J, FormOp::DelBar, k));
                conditions.push_back(restrict_cols(deldelbar));
            }
            if (k > 0) {
                Mat del_down = op_matrix_degree(J, FormOp::Del, k - 1);
                Mat delbar_down = op_matrix_degree(J, FormOp::DelBar, k - 1);
                conditions.push_back(restrict_cols(
                    adjoint_matrix(del_down, m.gram_matrix(k - 1), m.gram_matrix(k))));
                conditions.push_back(restrict_cols(
                    adjoint_matrix(delbar_down, m.gram_matrix(k - 1), m.gram_matrix(k))));
            }
            break;
        }
    }

    Mat stacked;
    for (const Mat& c : conditions) stacked.insert(stacked.end(), c.begin(), c.end());
    std::vector<Vec> ker =
        stacked.empty() ? std::vector<Vec>{} : kernel_basis(stacked);
    if (stacked.empty())
        for (size_t i = 0; i < cols.size(); ++i) {
            Vec v(cols.size(), GScalar(0));
            v[i] = GScalar(1);
            ker.push_back(v);
        }
    std::vector<FormQ> out;
    for (const Vec& v : ker) {
        Vec full(degree_masks.size(), GScalar(0));
        for (size_t j = 0; j < cols.size(); ++j) full[cols[j]] = v[j];
        out.push_back(from_frame_vec(J, full, k));
    }
    return out;
}

FormQ min_norm_solve_delbar(const FormQ& y, const Metric& m) {
    const ComplexStructure& J = m.structure();
    if (y.is_zero()) return {};
    int ky = y.degree();
    Mat T = op_matrix_degree(J, FormOp::DelBar, ky - 1);
    auto sol = solve(T, to_frame_vec(J, y, ky));
    if (!sol) throw NotExact("right-hand side is not delbar-exact");
    Vec x = *sol;

    std::vector<Vec> ker = kernel_basis(T);
    if (!ker.empty()) {
        // Project x off ker(delbar) w.r.t. the exact metric inner product.
        const Mat& M = m.gram_matrix(ky - 1);
        auto ip = [&](const Vec& a, const Vec& b) {
            GScalar acc(0);
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j)
                    if (!a[i].is_zero() && !b[j].is_zero()) acc += a[i] * b[j].conj() * M[i][j];
            return acc;
        };
        Mat gram = mat_zero(ker.size(), ker.size());
        Vec rhs(ker.size());
        for (size_t i = 0; i < ker.size(); ++i) {
            rhs[i] = ip(x, ker[i]);
            for (size_t j = 0; j < ker.size(); ++j) gram[i][j] = ip(ker[j], ker[i]);
        }
        auto coeffs = solve(gram, rhs);
        if (!coeffs) throw std::logic_error("kernel gram matrix singular");
        for (size_t j = 0; j < ker.size(); ++j)
            for (size_t i = 0; i < x.size(); ++i) x[i] -= (*coeffs)[j] * ker[j][i];
    }
    FormQ result = from_frame_vec(J, x, ky - 1);
    // Postcondition: delbar x = y and x orthogonal to ker(delbar).
    if (!(J.delbar(result) == y)) throw std::logic_error("min-norm solve failed to solve");
    for (const Vec& kv : ker)
        if (!m.inner(result, from_frame_vec(J, kv, ky - 1)).is_zero())
            throw std::logic_error("min-norm solve not orthogonal to kernel");
    return result;
}

FormQ aeppli_harmonic_representative(const FormQ& u, const Metric& m) {
    const ComplexStructure& J = m.structure();
    int k = u.degree();
    int p = -1, q = -1;
    for (const auto& [mm, c] : J.to_frame(u).coeffs()) {
        if (p < 0) p = mask_p(mm), q = mask_q(mm);
        if (mask_p(mm) != p || mask_q(mm) != q)
            throw DegreeMismatch("aeppli representative expects a pure-type form");
    }
    std::vector<FormQ> harm = laplacian_kernel(LaplacianKind::Aeppli, p, q, m);
    // Solve u = h + del s + delbar r exactly.
    std::vector<Vec> columns;
    for (const FormQ& h : harm) columns.push_back(to_frame_vec(J, h, k));
    size_t n_harm = columns.size();
    Mat del_down = op_matrix_degree(J, FormOp::Del, k - 1);
    Mat delbar_down = op_matrix_degree(J, FormOp::DelBar, k - 1);
    size_t n_down = masks_of_degree(k - 1).size();
    for (size_t j = 0; j < n_down; ++j) {
        Vec col(masks_of_degree(k).size(), GScalar(0));
        for (size_t i = 0; i < col.size(); ++i) col[i] = del_down[i][j];
        columns.push_back(col);
    }
    for (size_t j = 0; j < n_down; ++j) {
        Vec col(masks_of_degree(k).size(), GScalar(0));
        for (size_t i = 0; i < col.size(); ++i) col[i] = delbar_down[i][j];
        columns.push_back(col);
    }
    auto coeffs = solve(mat_transpose(columns), to_frame_vec(J, u, k));
    if (!coeffs) throw NotExact("form is not Aeppli-cohomologous to a harmonic one");
    FormQ h;
    for (size_t i = 0; i < n_harm; ++i) h += (*coeffs)[i] * harm[i];
    // Uniqueness: harmonic space meets im(del) + im(delbar) trivially.
    std::vector<Vec> harm_vecs(columns.begin(), columns.begin() + n_harm);
    std::vector<Vec> bdry_vecs(columns.begin() + n_harm, columns.end());
    if (!span_intersection(span_basis(harm_vecs), span_basis(bdry_vecs)).empty())
        throw std::logic_error("Aeppli harmonic representative is not unique");
    return h;
}

FormQ gauduchon_lift(const FormQ& aeppli_class_rep, const Metric& m) {
    const ComplexStructure& J = m.structure();
    FormQ omega22 = aeppli_harmonic_representative(aeppli_class_rep, m);
    FormQ rhs = -J.del(omega22);
    FormQ omega31 = rhs.is_zero() ? FormQ() : min_norm_solve_delbar(rhs, m);
    if (!omega31.is_zero() && !J.is_pure_type(omega31, 3, 1))
        throw std::logic_error("minimal solution has unexpected bidegree");
    FormQ lifted = omega31 + omega22 + conj(omega31);
    if (!d(lifted).is_zero())
        throw ClosednessFailure("lifted representative is not d-closed");
    return lifted;
}

FormQ canonical_surjection_p(const FormQ& closed4, const ComplexStructure& J) {
    if (!d(closed4).is_zero())
        throw ClosednessFailure("canonical surjection expects a d-closed form");
    return J.bidegree_component(closed4, 2, 2);
}

MetricPredicates metric_predicates(const Metric& m) {
    MetricPredicates out;
    out.positive = true;  // construction already guarantees positivity
    const ComplexStructure& J = m.structure();
    FormQ w2 = wedge(m.metric_form(), m.metric_form());
    FormQ del_w2 = J.del(w2);
    out.gauduchon = J.delbar(del_w2).is_zero();
    out.balanced = d(w2).is_zero();
    if (del_w2.is_zero()) {
        out.strongly_gauduchon = true;
    } else {
        try {
            min_norm_solve_delbar(del_w2, m);
            out.strongly_gauduchon = true;
        } catch (const NotExact&) {
            out.strongly_gauduchon = false;
        }
    }
    return out;
}

}  // namespace iwa
