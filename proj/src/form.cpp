#include "iwa/form.hpp"

#include <sstream>

namespace iwa {

int permuted_sign(Mask m, const int map6[6]) {
    int seq[6], n = 0;
    for (int i = 0; i < 6; ++i)
        if (m & (1u << i)) seq[n++] = map6[i];
    int inv = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (seq[a] > seq[b]) ++inv;
    return (inv & 1) ? -1 : 1;
}

template <class To, class From>
Form<To> promote(const Form<From>& u) {
    Form<To> r;
    for (const auto& [m, c] : u.coeffs()) r.add(m, To(c));
    return r;
}

template Form<RatFunc> promote<RatFunc, MultiPoly>(const Form<MultiPoly>&);

FormR to_ratfunc(const FormQ& u) {
    FormR r;
    for (const auto& [m, c] : u.coeffs()) r.add(m, RatFunc(c));
    return r;
}

FormQ eval(const FormR& u, const ParamPoint& pt) {
    FormQ r;
    for (const auto& [m, c] : u.coeffs()) r.add(m, c.eval(pt));
    return r;
}

FormJ eval_jet(const FormR& u, const ParamPoint& base) {
    FormJ r;
    for (const auto& [m, c] : u.coeffs()) r.add(m, c.eval_jet(base));
    return r;
}

FormQ jet_value(const FormJ& u) {
    FormQ r;
    for (const auto& [m, c] : u.coeffs()) r.add(m, c.value);
    return r;
}

FormQ jet_partial(const FormJ& u, int index) {
    FormQ r;
    for (const auto& [m, c] : u.coeffs()) r.add(m, c.partials[index]);
    return r;
}

const std::vector<Mask>& masks_of_degree(int k) {
    static std::vector<std::vector<Mask>> table = [] {
        std::vector<std::vector<Mask>> t(7);
        for (unsigned m = 0; m < 64; ++m) t[mask_degree(Mask(m))].push_back(Mask(m));
        return t;
    }();
    return table.at(k);
}

const std::vector<Mask>& masks_of_bidegree(int p, int q) {
    static std::vector<std::vector<Mask>> table = [] {
        std::vector<std::vector<Mask>> t(16);
        for (unsigned m = 0; m < 64; ++m)
            t[mask_p(Mask(m)) * 4 + mask_q(Mask(m))].push_back(Mask(m));
        return t;
    }();
    return table.at(p * 4 + q);
}

Vec form_to_vec(const FormQ& u, const std::vector<Mask>& basis) {
    Vec v(basis.size(), GScalar(0));
    size_t used = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = u.coeffs().find(basis[i]);
        if (it != u.coeffs().end()) {
            v[i] = it->second;
            ++used;
        }
    }
    if (used != u.coeffs().size())
        throw DegreeMismatch("form has components outside the given monomial basis");
    return v;
}

FormQ vec_to_form(const Vec& v, const std::vector<Mask>& basis) {
    FormQ u;
    for (size_t i = 0; i < basis.size(); ++i) u.add(basis[i], v[i]);
    return u;
}

GScalar integrate(const FormQ& u) {
    for (const auto& [m, c] : u.coeffs())
        if (mask_degree(m) != 6) throw DegreeMismatch("integrand is not a 6-form");
    // dV = i * (top monomial in canonical order), so top = -i * dV.
    return u.coeff(kTopMask) * (-GScalar::i());
}

Jet1 integrate(const FormJ& u) {
    for (const auto& [m, c] : u.coeffs())
        if (mask_degree(m) != 6) throw DegreeMismatch("integrand is not a 6-form");
    return u.coeff(kTopMask) * Jet1(-GScalar::i());
}

std::pair<Mask, GScalar> star_orthonormal_monomial(Mask m) {
    static const int swap_bar[6] = {3, 4, 5, 0, 1, 2};
    Mask comp = Mask(kTopMask & ~m);
    Mask k = Mask(((comp & 0x07) << 3) | ((comp & 0x38) >> 3));  // bar-swap of complement
    // star e_m = z e_k with conj(z) * sign(conj e_k) * sign(e_m ^ e_comp) = i
    int s1 = permuted_sign(k, swap_bar);
    int s2 = merge_sign(m, comp);
    GScalar z = -GScalar::i() * GScalar(s1 * s2);
    return {k, z};
}

std::string form_str(const FormQ& u) {
    static const char* names[6] = {"al", "be", "ga", "al~", "be~", "ga~"};
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : u.coeffs()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        bool first_factor = true;
        for (int i = 0; i < 6; ++i)
            if (m & (1u << i)) {
                os << (first_factor ? " " : "^") << names[i];
                first_factor = false;
            }
    }
    return os.str();
}

}  // namespace iwa
