#include "iwa/cohomology.hpp"

#include <algorithm>
#include <cassert>

namespace iwa {

namespace {

// Complete `boundaries` to a basis of `cycles`, preferring the given
// candidate representatives before falling back to the RREF cycle rows.
std::vector<Vec> quotient_reps(const std::vector<Vec>& cycles,
                               const std::vector<Vec>& boundaries,
                               const std::vector<Vec>& preferred) {
    std::vector<Vec> acc = boundaries;
    std::vector<Vec> reps;
    size_t r = span_basis(acc).size();
    if (r != boundaries.size()) throw std::runtime_error("boundary basis not independent");
    std::vector<Vec> candidates = preferred;
    candidates.insert(candidates.end(), cycles.begin(), cycles.end());
    for (const Vec& z : candidates) {
        acc.push_back(z);
        size_t r2 = span_basis(acc).size();
        if (r2 > r) {
            reps.push_back(z);
            r = r2;
        } else {
            acc.pop_back();
        }
    }
    return reps;
}

CohomologySpace make_space(const ComplexStructure& J, std::string kind,
                           std::vector<Mask> ambient, std::vector<Vec> cycles,
                           std::vector<Vec> boundaries,
                           const std::vector<Vec>& preferred_reps = {}) {
    for (const Vec& b : boundaries)
        if (!in_span(b, cycles))
            throw std::runtime_error(kind + ": boundary space not contained in cycle space");
    CohomologySpace s{J, std::move(kind), std::move(ambient), span_basis(cycles),
                      span_basis(boundaries), {}};
    s.rep_coords = quotient_reps(s.cycles, s.boundaries, preferred_reps);
    return s;
}

std::vector<Vec> coordinate_basis(size_t n) {
    std::vector<Vec> b(n, Vec(n, GScalar(0)));
    for (size_t i = 0; i < n; ++i) b[i][i] = GScalar(1);
    return b;
}

std::vector<Vec> image_of(const Mat& m) {
    std::vector<Vec> cols;
    if (m.empty()) return cols;
    for (size_t j = 0; j < m[0].size(); ++j) {
        Vec v(m.size(), GScalar(0));
        for (size_t i = 0; i < m.size(); ++i) v[i] = m[i][j];
        cols.push_back(std::move(v));
    }
    return span_basis(cols);
}

}  // namespace

Mat frame_d_matrix(const ComplexStructure& J, const std::vector<Mask>& sources,
                   const std::vector<Mask>& targets) {
    Mat m = mat_zero(targets.size(), sources.size());
    for (size_t j = 0; j < sources.size(); ++j) {
        FormQ mono = FormQ::monomial(sources[j], GScalar(1));
        FormQ image = J.to_frame(d(J.from_frame(mono)));
        for (size_t i = 0; i < targets.size(); ++i) m[i][j] = image.coeff(targets[i]);
        size_t hits = 0;
        for (const auto& [mask, c] : image.coeffs())
            if (std::find(targets.begin(), targets.end(), mask) != targets.end()) ++hits;
        if (hits != image.coeffs().size())
            throw DegreeMismatch("d image leaves the requested target monomial span");
    }
    return m;
}

std::vector<FormQ> CohomologySpace::representatives() const {
    std::vector<FormQ> out;
    for (size_t i = 0; i < rep_coords.size(); ++i) out.push_back(representative(i));
    return out;
}

FormQ CohomologySpace::representative(size_t i) const {
    return J.from_frame(vec_to_form(rep_coords[i], ambient));
}

Vec CohomologySpace::to_ambient(const FormQ& u) const {
    return form_to_vec(J.to_frame(u), ambient);
}

bool CohomologySpace::contains_cycle(const FormQ& u) const {
    return in_span(to_ambient(u), cycles);
}

std::optional<Vec> CohomologySpace::class_coordinates(const FormQ& u) const {
    Vec v = to_ambient(u);
    std::vector<Vec> basis = boundaries;
    basis.insert(basis.end(), rep_coords.begin(), rep_coords.end());
    auto coords = coordinates_in(v, basis);
    if (!coords) return std::nullopt;
    return Vec(coords->begin() + boundaries.size(), coords->end());
}

bool CohomologySpace::is_zero_class(const FormQ& u) const {
    auto c = class_coordinates(u);
    if (!c) throw DegreeMismatch(kind + ": form is not a cycle");
    for (const auto& z : *c)
        if (!z.is_zero()) return false;
    return true;
}

bool CohomologySpace::same_class(const FormQ& u, const FormQ& v) const {
    return is_zero_class(u - v);
}

CohomologySpace de_rham(int k) {
    ComplexStructure J0(ParamPoint::zero());
    const auto& ambient = masks_of_degree(k);
    Mat dk = frame_d_matrix(J0, ambient, masks_of_degree(k + 1 > 6 ? 6 : k + 1));
    std::vector<Vec> cycles =
        (k == 6) ? coordinate_basis(ambient.size()) : kernel_basis(dk);
    std::vector<Vec> boundaries;
    if (k > 0) boundaries = image_of(frame_d_matrix(J0, masks_of_degree(k - 1), ambient));
    return make_space(J0, "de_rham(" + std::to_string(k) + ")", ambient, cycles, boundaries);
}

namespace {

std::string pq_tag(const std::string& name, int p, int q) {
    return name + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<Mask> bidegree_or_empty(int p, int q) {
    if (p < 0 || q < 0 || p > 3 || q > 3) return {};
    return masks_of_bidegree(p, q);
}

Mat op_matrix(const ComplexStructure& J, int p, int q, int dp, int dq) {
    auto src = bidegree_or_empty(p, q);
    auto dst = bidegree_or_empty(p + dp, q + dq);
    if (src.empty() || dst.empty()) return mat_zero(dst.size(), src.size());
    // d on a pure (p,q) frame monomial has only (p+1,q) and (p,q+1) parts;
    // restricting targets picks out del or delbar.
    Mat full = mat_zero(dst.size(), src.size());
    for (size_t j = 0; j < src.size(); ++j) {
        FormQ image = J.to_frame(d(J.from_frame(FormQ::monomial(src[j], GScalar(1)))));
        for (size_t i = 0; i < dst.size(); ++i) full[i][j] = image.coeff(dst[i]);
    }
    return full;
}

}  // namespace

CohomologySpace dolbeault(int p, int q, const ComplexStructure& J) {
    auto ambient = bidegree_or_empty(p, q);
    Mat delbar = op_matrix(J, p, q, 0, 1);
    std::vector<Vec> cycles = q == 3 ? coordinate_basis(ambient.size()) : kernel_basis(delbar);
    std::vector<Vec> boundaries;
    if (q > 0) boundaries = image_of(op_matrix(J, p, q - 1, 0, 1));
    return make_space(J, pq_tag("dolbeault", p, q), ambient, cycles, boundaries);
}

CohomologySpace bott_chern(int p, int q, const ComplexStructure& J) {
    auto ambient = bidegree_or_empty(p, q);
    Mat del = op_matrix(J, p, q, 1, 0);
    Mat delbar = op_matrix(J, p, q, 0, 1);
    Mat stacked = del;
    stacked.insert(stacked.end(), delbar.begin(), delbar.end());
    std::vector<Vec> cycles =
        stacked.empty() ? coordinate_basis(ambient.size()) : kernel_basis(stacked);
    std::vector<Vec> boundaries;
    if (p > 0 && q > 0) {
        Mat deldelbar = mat_mul(op_matrix(J, p - 1, q, 1, 0), op_matrix(J, p - 1, q - 1, 0, 1));
        boundaries = image_of(deldelbar);
    }
    return make_space(J, pq_tag("bott_chern", p, q), ambient, cycles, boundaries);
}

CohomologySpace aeppli(int p, int q, const ComplexStructure& J) {
    auto ambient = bidegree_or_empty(p, q);
    Mat deldelbar = (p < 3 && q < 3)
                        ? mat_mul(op_matrix(J, p, q + 1, 1, 0), op_matrix(J, p, q, 0, 1))
                        : mat_zero(0, ambient.size());
    std::vector<Vec> cycles =
        deldelbar.empty() ? coordinate_basis(ambient.size()) : kernel_basis(deldelbar);
    std::vector<Vec> im_del, im_delbar;
    if (p > 0) im_del = image_of(op_matrix(J, p - 1, q, 1, 0));
    if (q > 0) im_delbar = image_of(op_matrix(J, p, q - 1, 0, 1));
    std::vector<Vec> boundaries = span_intersection(span_sum(im_del, im_delbar), cycles);
    return make_space(J, pq_tag("aeppli", p, q), ambient, cycles, boundaries);
}

namespace {

// Z_r^{p,q} = {a in F^p A^{p+q} : d a in F^{p+r} A^{p+q+1}}, as vectors over
// the full frame monomial basis of degree p+q.
std::vector<Vec> frolicher_z(int r, int p, int q, const ComplexStructure& J) {
    int k = p + q;
    if (k < 0 || k > 6 || p > 3) return {};
    const auto& all = masks_of_degree(k);
    std::vector<Mask> fp;
    for (Mask m : all)
        if (mask_p(m) >= std::max(p, 0)) fp.push_back(m);
    if (fp.empty()) return {};
    if (k == 6) {
        std::vector<Vec> out;
        for (Mask m : fp) {
            Vec v(all.size(), GScalar(0));
            v[std::find(all.begin(), all.end(), m) - all.begin()] = GScalar(1);
            out.push_back(std::move(v));
        }
        return span_basis(out);
    }
    const auto& targets_all = masks_of_degree(k + 1);
    std::vector<Mask> low_targets;  // complement of F^{p+r} in degree k+1
    for (Mask m : targets_all)
        if (mask_p(m) < p + r) low_targets.push_back(m);
    Mat sys = frame_d_matrix(J, fp, targets_all);
    Mat restricted = mat_zero(low_targets.size(), fp.size());
    for (size_t i = 0; i < low_targets.size(); ++i) {
        size_t row = std::find(targets_all.begin(), targets_all.end(), low_targets[i]) -
                     targets_all.begin();
        restricted[i] = sys[row];
    }
    std::vector<Vec> ker =
        restricted.empty() ? coordinate_basis(fp.size()) : kernel_basis(restricted);
    // Embed F^p coordinates into the full degree-k coordinate space.
    std::vector<Vec> out;
    for (const Vec& v : ker) {
        Vec w(all.size(), GScalar(0));
        for (size_t j = 0; j < fp.size(); ++j) {
            size_t col = std::find(all.begin(), all.end(), fp[j]) - all.begin();
            w[col] = v[j];
        }
        out.push_back(std::move(w));
    }
    return span_basis(out);
}

std::vector<Vec> apply_d(const std::vector<Vec>& vectors, int k,
                         const ComplexStructure& J) {
    if (vectors.empty() || k >= 6) return {};
    Mat dk = frame_d_matrix(J, masks_of_degree(k), masks_of_degree(k + 1));
    std::vector<Vec> out;
    for (const Vec& v : vectors) out.push_back(mat_apply(dk, v));
    return span_basis(out);
}

// Dimension of E_2^{p,q} via the map induced by del on Dolbeault classes,
// with explicit well-definedness checks.
size_t e2_dim_via_induced_del(int p, int q, const ComplexStructure& J) {
    CohomologySpace here = dolbeault(p, q, J);
    auto check_well_defined = [&](const CohomologySpace& from, const CohomologySpace& to) {
        for (const Vec& b : from.boundaries) {
            FormQ bd = J.from_frame(vec_to_form(b, from.ambient));
            FormQ img = J.del(bd);
            if (!to.contains_cycle(img) || !to.is_zero_class(img))
                throw std::runtime_error(
                    "E2 ill-defined: del does not descend to Dolbeault classes");
        }
    };
    size_t ker_dim = here.dimension();
    if (p < 3) {
        CohomologySpace right = dolbeault(p + 1, q, J);
        check_well_defined(here, right);
        Mat m = mat_zero(right.dimension(), here.dimension());
        for (size_t j = 0; j < here.dimension(); ++j) {
            FormQ img = J.del(here.representative(j));
            if (!right.contains_cycle(img))
                throw std::runtime_error("E2 ill-defined: del image is not delbar-closed");
            Vec c = *right.class_coordinates(img);
            for (size_t i = 0; i < right.dimension(); ++i) m[i][j] = c[i];
        }
        ker_dim = kernel_basis(m).size();
    }
    size_t img_dim = 0;
    if (p > 0) {
        CohomologySpace left = dolbeault(p - 1, q, J);
        check_well_defined(left, here);
        Mat m = mat_zero(here.dimension(), left.dimension());
        for (size_t j = 0; j < left.dimension(); ++j) {
            FormQ img = J.del(left.representative(j));
            if (!here.contains_cycle(img))
                throw std::runtime_error("E2 ill-defined: del image is not delbar-closed");
            Vec c = *here.class_coordinates(img);
            for (size_t i = 0; i < here.dimension(); ++i) m[i][j] = c[i];
        }
        img_dim = rank(m);
    }
    return ker_dim - img_dim;
}

}  // namespace

CohomologySpace frolicher_page(int r, int p, int q, const ComplexStructure& J) {
    if (r < 1) throw std::invalid_argument("frolicher_page: r >= 1 required");
    int k = p + q;
    const auto& ambient = masks_of_degree(k);
    std::vector<Vec> z_r = frolicher_z(r, p, q, J);
    std::vector<Vec> b1 = frolicher_z(r - 1, p + 1, q - 1, J);
    std::vector<Vec> b2 = apply_d(frolicher_z(r - 1, p - r + 1, q + r - 2, J), k - 1, J);
    std::vector<Vec> boundaries = span_intersection(span_sum(b1, b2), z_r);
    // The boundary space is contained in Z_r; the intersection only guards
    // against a filtration bookkeeping error and is checked below.
    if (boundaries.size() != span_sum(b1, b2).size())
        throw std::runtime_error("frolicher_page: boundary space escapes Z_r");
    CohomologySpace s = make_space(
        J, "frolicher_e" + std::to_string(r) + pq_tag("", p, q), ambient, z_r, boundaries);
    if (r == 2) {
        size_t via_map = e2_dim_via_induced_del(p, q, J);
        if (via_map != s.dimension())
            throw std::runtime_error("E2 dimension mismatch between filtration and induced-map routes");
    }
    return s;
}

MasseyResult massey_triple(const FormQ& a, const FormQ& b, const FormQ& c) {
    for (const FormQ* f : {&a, &b, &c}) {
        if (!f->is_zero() && f->degree() != 1) throw DegreeMismatch("massey_triple expects 1-forms");
        if (!d(*f).is_zero()) throw NotDefined("massey_triple expects closed 1-forms");
    }
    ComplexStructure J0(ParamPoint::zero());
    Mat d1 = frame_d_matrix(J0, masks_of_degree(1), masks_of_degree(2));
    auto primitive = [&](const FormQ& w) -> FormQ {
        auto sol = solve(d1, form_to_vec(w, masks_of_degree(2)));
        if (!sol) throw NotDefined("massey_triple: product is not exact");
        return vec_to_form(*sol, masks_of_degree(1));
    };
    FormQ x = primitive(wedge(a, b));
    FormQ y = primitive(wedge(b, c));
    // Representative x^c - (-1)^{deg a} a^y for degree-one a.
    FormQ rep = wedge(x, c) + wedge(a, y);

    CohomologySpace h1 = de_rham(1), h2 = de_rham(2);
    MasseyResult result;
    result.representative = rep;
    std::vector<Vec> indet_coords;
    for (const FormQ& h : h1.representatives()) {
        for (const FormQ& base : {a, c}) {
            FormQ w = wedge(base, h);
            auto coords = h2.class_coordinates(w);
            if (!coords) throw std::logic_error("massey indeterminacy: product not closed");
            indet_coords.push_back(*coords);
            result.indeterminacy_basis.push_back(w);
        }
    }
    auto rep_coords = h2.class_coordinates(rep);
    if (!rep_coords) throw std::logic_error("massey representative not closed");
    result.is_nonzero = !in_span(*rep_coords, span_basis(indet_coords));
    return result;
}

Mat duality_pairing_matrix(const CohomologySpace& bc, const CohomologySpace& ae) {
    auto u = bc.representatives();
    auto v = ae.representatives();
    Mat m = mat_zero(u.size(), v.size());
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) m[i][j] = integrate(wedge(u[i], v[j]));
    return m;
}

namespace {

// A subspace of a Dolbeault group spanned by the classes of the given forms:
// cycles are the forms together with the full boundary space, so class-level
// queries work modulo delbar-exact forms.
CohomologySpace class_span(const ComplexStructure& J, const std::string& kind,
                           const CohomologySpace& full, const std::vector<FormQ>& forms) {
    std::vector<Vec> generators;
    for (const FormQ& g : forms) {
        if (!full.contains_cycle(g))
            throw StructureEquationViolation(kind + ": generator is not a Dolbeault cycle");
        generators.push_back(full.to_ambient(g));
    }
    std::vector<Vec> cycles = span_sum(generators, full.boundaries);
    CohomologySpace s = make_space(J, kind, full.ambient, cycles, full.boundaries, generators);
    if (s.dimension() != forms.size())
        throw std::runtime_error(kind + ": generating classes are not linearly independent");
    return s;
}

}  // namespace

CohomologySpace essential_space(const ComplexStructure& J) {
    auto gammas = gamma_forms(J);
    return class_span(J, "essential_21", dolbeault(2, 1, J),
                      {gammas.begin(), gammas.end()});
}

CohomologySpace essential_space_12(const ComplexStructure& J) {
    std::vector<FormQ> forms;
    for (const FormQ& g : gamma_forms(J))
        forms.push_back(J.from_frame(star_orthonormal(J.to_frame(conj(g)))));
    return class_span(J, "essential_12", dolbeault(1, 2, J), forms);
}

std::vector<int> betti_numbers() {
    std::vector<int> b;
    for (int k = 0; k <= 6; ++k) b.push_back(int(de_rham(k).dimension()));
    return b;
}

}  // namespace iwa
